//! Arrangements of the singles of a special symbol into pairs, the cells
//! `C_{Φ,Ψ}` they cut out of a family, and machine checks that cell sums
//! are uniform and that distinct symbols can be separated by cells.

use std::fmt;

use crate::almost::{project_model_vector, OrientationPolicy, UnipotentVector};
use crate::special::{family, FamilyMember, SpecialSymbol};
use crate::symbols::{GroupKind, GroupTag, LabeledSymbol, Symbol};
use crate::Error;

/// An arrangement of the singles of a special symbol: `deg(Z)` pairs, each
/// joining one top single to one bottom single, plus one isolated top
/// single when the defect is 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrangement {
    owner: SpecialSymbol,
    pairs: Vec<(u32, u32)>,
    isolated: Option<u32>,
}

impl Arrangement {
    pub fn owner(&self) -> &SpecialSymbol {
        &self.owner
    }

    /// Pairs as `(top single, bottom single)`.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn isolated(&self) -> Option<u32> {
        self.isolated
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> =
            self.pairs.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
        write!(f, "[{}]", pairs.join(" "))?;
        if let Some(e) = self.isolated {
            write!(f, "+{e}")?;
        }
        Ok(())
    }
}

/// All arrangements of `Z`: for defect 1, every choice of isolated top
/// single and every matching of the remaining singles; for defect 0, every
/// matching of top singles with bottom singles.
pub fn enumerate_arrangements(z: &SpecialSymbol) -> Vec<Arrangement> {
    let tops = z.top_singles();
    let bottoms = z.bottom_singles();
    let mut out = Vec::new();
    match z.defect() {
        1 => {
            for (i, &isolated) in tops.iter().enumerate() {
                let rest: Vec<u32> =
                    tops.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &e)| e).collect();
                for perm in permutations(bottoms.len()) {
                    let pairs: Vec<(u32, u32)> =
                        rest.iter().zip(perm.iter()).map(|(&t, &bi)| (t, bottoms[bi])).collect();
                    out.push(Arrangement { owner: z.clone(), pairs, isolated: Some(isolated) });
                }
            }
            if tops.is_empty() {
                debug_assert!(bottoms.is_empty());
            }
        }
        0 => {
            for perm in permutations(bottoms.len()) {
                let pairs: Vec<(u32, u32)> =
                    tops.iter().zip(perm.iter()).map(|(&t, &bi)| (t, bottoms[bi])).collect();
                out.push(Arrangement { owner: z.clone(), pairs, isolated: None });
            }
        }
        _ => {}
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

/// A subset of the pairs of an arrangement, stored as sorted pair indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairSubset {
    arrangement: Arrangement,
    chosen: Vec<usize>,
}

impl PairSubset {
    pub fn new(arrangement: Arrangement, mut chosen: Vec<usize>) -> Result<Self, Error> {
        chosen.sort_unstable();
        chosen.dedup();
        if chosen.iter().any(|&i| i >= arrangement.pairs.len()) {
            return Err(Error::Precondition(format!(
                "pair index out of range for arrangement {arrangement}"
            )));
        }
        Ok(PairSubset { arrangement, chosen })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn chosen(&self) -> &[usize] {
        &self.chosen
    }

    /// Number of pairs of `Φ` outside `Ψ`.
    pub fn dropped_count(&self) -> usize {
        self.arrangement.pairs.len() - self.chosen.len()
    }

    /// Admissibility is a parity condition on `#(Φ \ Ψ)` by orthogonal sign.
    pub fn is_admissible(&self, kind: GroupKind) -> bool {
        match kind.epsilon() {
            Some(1) => self.dropped_count() % 2 == 0,
            Some(-1) => self.dropped_count() % 2 == 1,
            None => true,
        }
    }

    pub fn all_of(arrangement: &Arrangement) -> Vec<PairSubset> {
        let k = arrangement.pairs.len();
        (0..(1u32 << k))
            .map(|mask| PairSubset {
                arrangement: arrangement.clone(),
                chosen: (0..k).filter(|i| mask >> i & 1 == 1).collect(),
            })
            .collect()
    }
}

impl fmt::Display for PairSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self
            .chosen
            .iter()
            .map(|&i| {
                let (a, b) = self.arrangement.pairs[i];
                format!("{{{a},{b}}}")
            })
            .collect();
        write!(f, "[{}]", pairs.join(" "))
    }
}

/// Parity of `M` against one pair: how many of the pair's two entries lie
/// in `M`.
fn pair_intersection(member: &FamilyMember, pair: (u32, u32)) -> usize {
    let mut c = 0;
    if member.subset.top_picks().contains(&pair.0) {
        c += 1;
    }
    if member.subset.bottom_picks().contains(&pair.1) {
        c += 1;
    }
    c
}

/// The cell `C_{Φ,Ψ}`: members `Λ_M` of the family whose subset `M` meets
/// every pair of `Ψ` evenly and every pair of `Φ \ Ψ` oddly.
///
/// The subset-closure congruence family defining cells reduces to these
/// single-pair parities (parities add over unions of pairs); this is the
/// convention fixed here, validated by the exhaustive uniformity and
/// separation checks at small rank.
pub fn cell(psi: &PairSubset, tag: GroupTag) -> Result<Vec<Symbol>, Error> {
    let kind = tag.kind;
    if kind.is_even_orthogonal() && !psi.is_admissible(kind) {
        return Err(Error::InadmissiblePairSubset(format!(
            "{psi} for {kind} (dropped {})",
            psi.dropped_count()
        )));
    }
    let phi = &psi.arrangement;
    let members = family(phi.owner(), kind)?;
    let mut out = Vec::new();
    for member in members {
        let mut ok = true;
        for (i, &pair) in phi.pairs.iter().enumerate() {
            let want_odd = !psi.chosen.contains(&i);
            if (pair_intersection(&member, pair) % 2 == 1) != want_odd {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(member.symbol);
        }
    }
    Ok(out)
}

/// Checks that the sum of the model basis vectors over the cell is fixed by
/// the uniform projection.
pub fn verify_cell_uniformity(psi: &PairSubset, tag: GroupTag) -> Result<bool, Error> {
    let symbols = cell(psi, tag)?;
    Ok(vector_is_uniform(tag, &symbols))
}

/// True iff the sum of `ρ_Λ` over the given symbols equals its own uniform
/// projection.
pub fn vector_is_uniform(tag: GroupTag, symbols: &[Symbol]) -> bool {
    let mut v = UnipotentVector::zero(tag);
    for s in symbols {
        v.add_term(LabeledSymbol::plain(s.clone()), crate::scalar::Sqrt2Rational::one());
    }
    v.normalize();
    let projected = project_model_vector(&v, OrientationPolicy::Lex);
    projected == v
}

/// Searches for an arrangement whose cells separate `l1` from `l2`, i.e.
/// `l1 ∈ C_{Φ,Ψ1}`, `l2 ∈ C_{Φ,Ψ2}` with the two cells disjoint. Cells of a
/// fixed arrangement with distinct pair subsets are disjoint, so it
/// suffices that the two symbols' subsets meet some pair with different
/// parities.
pub fn find_separating_cell(
    l1: &Symbol,
    l2: &Symbol,
    tag: GroupTag,
) -> Result<(Arrangement, PairSubset, PairSubset), Error> {
    if l1 == l2 {
        return Err(Error::Precondition("symbols must be distinct".into()));
    }
    if tag.kind.is_even_orthogonal() && *l1 == l2.transpose() {
        return Err(Error::Precondition(
            "cells are transpose-closed; a transpose pair cannot be separated".into(),
        ));
    }
    let (z1, _) = crate::special::family_of_symbol(l1)?;
    let (z2, _) = crate::special::family_of_symbol(l2)?;
    if z1 != z2 {
        return Err(Error::Precondition("symbols lie in different families".into()));
    }
    for phi in enumerate_arrangements(&z1) {
        let psi1 = membership_subset(&phi, l1)?;
        let psi2 = membership_subset(&phi, l2)?;
        if psi1 != psi2 {
            let p1 = PairSubset { arrangement: phi.clone(), chosen: psi1 };
            let p2 = PairSubset { arrangement: phi, chosen: psi2 };
            return Ok((p1.arrangement.clone(), p1, p2));
        }
    }
    Err(Error::Precondition(format!(
        "no separating arrangement exists for {l1} and {l2}"
    )))
}

/// The unique `Ψ` with `Λ ∈ C_{Φ,Ψ}`: the set of pairs met evenly by `M`.
fn membership_subset(phi: &Arrangement, lambda: &Symbol) -> Result<Vec<usize>, Error> {
    let (_, m) = crate::special::family_of_symbol(lambda)?;
    let member = FamilyMember { symbol: lambda.clone(), subset: m, label: None };
    Ok(phi
        .pairs
        .iter()
        .enumerate()
        .filter(|&(_, &pair)| pair_intersection(&member, pair) % 2 == 0)
        .map(|(i, _)| i)
        .collect())
}
