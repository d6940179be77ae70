//! Special symbols, their singles, the subset-indexed families `S_Z^G`, and
//! the mod-2 pairing that drives all Fourier-style coefficients.

use std::collections::BTreeSet;
use std::fmt;

use crate::symbols::{enumerate_symbols, CopyLabel, GroupKind, LabeledSymbol, Symbol};
use crate::Error;

/// A special symbol: defect 0 or 1 with interlacing rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpecialSymbol(Symbol);

/// True iff the symbol has defect 0 or 1 and its rows interlace
/// (`a1 >= b1 >= a2 >= b2 >= ...`).
pub fn is_special(s: &Symbol) -> bool {
    let d = s.defect();
    if d != 0 && d != 1 {
        return false;
    }
    let top = s.top();
    let bottom = s.bottom();
    for i in 0..bottom.len() {
        if top[i] < bottom[i] {
            return false;
        }
        if let Some(&next) = top.get(i + 1) {
            if bottom[i] < next {
                return false;
            }
        }
    }
    true
}

impl SpecialSymbol {
    pub fn new(s: Symbol) -> Result<Self, Error> {
        if is_special(&s) {
            Ok(SpecialSymbol(s))
        } else {
            Err(Error::NotSpecial(s.to_string()))
        }
    }

    pub fn symbol(&self) -> &Symbol {
        &self.0
    }

    pub fn defect(&self) -> i32 {
        self.0.defect()
    }

    pub fn rank(&self) -> u32 {
        self.0.rank()
    }

    pub fn is_degenerate(&self) -> bool {
        self.0.is_degenerate()
    }

    /// The subsymbol `Z_I` of entries occurring in exactly one row.
    pub fn singles(&self) -> Symbol {
        Symbol::new(self.top_singles(), self.bottom_singles())
            .expect("rows of a subsymbol are strictly decreasing")
    }

    /// Top-row singles, descending.
    pub fn top_singles(&self) -> Vec<u32> {
        let bottom: BTreeSet<u32> = self.0.bottom().iter().copied().collect();
        self.0.top().iter().copied().filter(|e| !bottom.contains(e)).collect()
    }

    /// Bottom-row singles, descending.
    pub fn bottom_singles(&self) -> Vec<u32> {
        let top: BTreeSet<u32> = self.0.top().iter().copied().collect();
        self.0.bottom().iter().copied().filter(|e| !top.contains(e)).collect()
    }

    /// `deg(Z) = (|Z_I| - def(Z)) / 2`, a non-negative integer.
    pub fn degree(&self) -> u32 {
        let singles = (self.top_singles().len() + self.bottom_singles().len()) as i32;
        let d = singles - self.defect();
        debug_assert!(d >= 0 && d % 2 == 0);
        (d / 2) as u32
    }

    /// All subsets of the singles, in a fixed enumeration order.
    pub fn all_subsets(&self) -> Vec<SinglesSubset> {
        let tops = self.top_singles();
        let bottoms = self.bottom_singles();
        let mut out = Vec::new();
        for bmask in 0..(1u32 << bottoms.len()) {
            for tmask in 0..(1u32 << tops.len()) {
                let top_picks: Vec<u32> = tops
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| tmask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let bottom_picks: Vec<u32> = bottoms
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bmask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                out.push(SinglesSubset { owner: self.clone(), top_picks, bottom_picks });
            }
        }
        out
    }
}

impl fmt::Display for SpecialSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for SpecialSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

/// A subset `M` of the singles of a special symbol, stored row-wise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SinglesSubset {
    owner: SpecialSymbol,
    top_picks: Vec<u32>,
    bottom_picks: Vec<u32>,
}

impl SinglesSubset {
    pub fn new(
        owner: SpecialSymbol,
        top_picks: impl Into<Vec<u32>>,
        bottom_picks: impl Into<Vec<u32>>,
    ) -> Result<Self, Error> {
        let mut top_picks: Vec<u32> = top_picks.into();
        let mut bottom_picks: Vec<u32> = bottom_picks.into();
        top_picks.sort_unstable_by(|a, b| b.cmp(a));
        bottom_picks.sort_unstable_by(|a, b| b.cmp(a));
        let tops = owner.top_singles();
        let bottoms = owner.bottom_singles();
        if !top_picks.iter().all(|e| tops.contains(e))
            || !bottom_picks.iter().all(|e| bottoms.contains(e))
        {
            return Err(Error::InvalidSubset(format!(
                "picks {top_picks:?};{bottom_picks:?} are not singles of {owner}"
            )));
        }
        Ok(SinglesSubset { owner, top_picks, bottom_picks })
    }

    pub fn empty(owner: SpecialSymbol) -> Self {
        SinglesSubset { owner, top_picks: Vec::new(), bottom_picks: Vec::new() }
    }

    pub fn owner(&self) -> &SpecialSymbol {
        &self.owner
    }

    pub fn top_picks(&self) -> &[u32] {
        &self.top_picks
    }

    pub fn bottom_picks(&self) -> &[u32] {
        &self.bottom_picks
    }

    pub fn len(&self) -> usize {
        self.top_picks.len() + self.bottom_picks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Complement inside the singles of the owner.
    pub fn complement(&self) -> SinglesSubset {
        let top_picks = self
            .owner
            .top_singles()
            .into_iter()
            .filter(|e| !self.top_picks.contains(e))
            .collect();
        let bottom_picks = self
            .owner
            .bottom_singles()
            .into_iter()
            .filter(|e| !self.bottom_picks.contains(e))
            .collect();
        SinglesSubset { owner: self.owner.clone(), top_picks, bottom_picks }
    }

    /// The family member `Λ_M = (Z \ M) ∪ M^t`.
    pub fn to_symbol(&self) -> Symbol {
        let z = &self.owner.0;
        let mut top: Vec<u32> = z
            .top()
            .iter()
            .copied()
            .filter(|e| !self.top_picks.contains(e))
            .chain(self.bottom_picks.iter().copied())
            .collect();
        let mut bottom: Vec<u32> = z
            .bottom()
            .iter()
            .copied()
            .filter(|e| !self.bottom_picks.contains(e))
            .chain(self.top_picks.iter().copied())
            .collect();
        top.sort_unstable_by(|a, b| b.cmp(a));
        bottom.sort_unstable_by(|a, b| b.cmp(a));
        Symbol::new(top, bottom).expect("moving singles preserves strict decrease")
    }
}

impl fmt::Display for SinglesSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| -> String {
            if r.is_empty() {
                "-".to_string()
            } else {
                r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }
        };
        write!(f, "({};{})", row(&self.top_picks), row(&self.bottom_picks))
    }
}

impl fmt::Debug for SinglesSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The pairing `⟨Λ_{M1}, Λ_{M2}⟩ = |M1 ∩ M2| mod 2`.
pub fn pairing(m1: &SinglesSubset, m2: &SinglesSubset) -> Result<u8, Error> {
    if m1.owner != m2.owner {
        return Err(Error::OwnerMismatch(m1.owner.to_string(), m2.owner.to_string()));
    }
    let mut count = 0usize;
    for e in &m1.top_picks {
        if m2.top_picks.contains(e) {
            count += 1;
        }
    }
    for e in &m1.bottom_picks {
        if m2.bottom_picks.contains(e) {
            count += 1;
        }
    }
    Ok((count % 2) as u8)
}

/// A member of a family `S_Z^G`: its indexing subset and the symbol, with a
/// copy label for the degenerate `SO^ε` doubling.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyMember {
    pub subset: SinglesSubset,
    pub symbol: Symbol,
    pub label: Option<CopyLabel>,
}

/// The family `S_Z^G` indexed by subsets of the singles, filtered by the
/// group's parity rule (`Sp`/`O^+`: even `|M|`, `SO_odd`/`O^-`: odd;
/// `SO^ε` via the transpose quotient with degenerate doubling).
pub fn family(z: &SpecialSymbol, kind: GroupKind) -> Result<Vec<FamilyMember>, Error> {
    if z.defect() != kind.special_defect() {
        return Err(Error::DefectMismatch(z.to_string(), kind.to_string()));
    }
    let member = |m: SinglesSubset| -> FamilyMember {
        let symbol = m.to_symbol();
        FamilyMember { subset: m, symbol, label: None }
    };
    match kind {
        GroupKind::Sp | GroupKind::Oplus => Ok(z
            .all_subsets()
            .into_iter()
            .filter(|m| m.len() % 2 == 0)
            .map(member)
            .collect()),
        GroupKind::SOodd | GroupKind::Ominus => Ok(z
            .all_subsets()
            .into_iter()
            .filter(|m| m.len() % 2 == 1)
            .map(member)
            .collect()),
        GroupKind::SOplus | GroupKind::SOminus => {
            if z.is_degenerate() {
                if kind == GroupKind::SOminus {
                    return Ok(Vec::new());
                }
                let m = SinglesSubset::empty(z.clone());
                return Ok(vec![
                    FamilyMember {
                        subset: m.clone(),
                        symbol: z.0.clone(),
                        label: Some(CopyLabel::I),
                    },
                    FamilyMember { subset: m, symbol: z.0.clone(), label: Some(CopyLabel::II) },
                ]);
            }
            let parity = if kind == GroupKind::SOplus { 0 } else { 1 };
            let mut out = Vec::new();
            for m in z.all_subsets() {
                if m.len() % 2 != parity {
                    continue;
                }
                let symbol = m.to_symbol();
                // keep one representative per {Λ, Λ^t} pair
                if symbol <= symbol.transpose() {
                    out.push(FamilyMember { subset: m, symbol, label: None });
                }
            }
            Ok(out)
        }
    }
}

/// Recovers the unique special symbol `Z` whose family contains `s`, and the
/// subset `M` with `Λ_M = s`.
pub fn family_of_symbol(s: &Symbol) -> Result<(SpecialSymbol, SinglesSubset), Error> {
    let top: BTreeSet<u32> = s.top().iter().copied().collect();
    let bottom: BTreeSet<u32> = s.bottom().iter().copied().collect();
    let shared: Vec<u32> = top.intersection(&bottom).rev().copied().collect();
    let mut singles: Vec<u32> = top.symmetric_difference(&bottom).rev().copied().collect();
    singles.sort_unstable_by(|a, b| b.cmp(a));

    let delta0 = s.defect().rem_euclid(2);
    if (singles.len() as i32 - delta0).rem_euclid(2) != 0 {
        return Err(Error::NoSpecialFamily(s.to_string()));
    }

    // Redistribute the singles alternately, largest to the top row.
    let mut zt: Vec<u32> = Vec::new();
    let mut zb: Vec<u32> = Vec::new();
    for (i, &e) in singles.iter().enumerate() {
        if i % 2 == 0 {
            zt.push(e);
        } else {
            zb.push(e);
        }
    }
    zt.extend_from_slice(&shared);
    zb.extend_from_slice(&shared);
    zt.sort_unstable_by(|a, b| b.cmp(a));
    zb.sort_unstable_by(|a, b| b.cmp(a));
    let z = Symbol::new(zt, zb).map_err(|_| Error::NoSpecialFamily(s.to_string()))?;
    let z = SpecialSymbol::new(z).map_err(|_| Error::NoSpecialFamily(s.to_string()))?;

    // M: top singles of Z that ended up in the bottom row of s, and vice versa.
    let top_picks: Vec<u32> =
        z.top_singles().into_iter().filter(|e| bottom.contains(e)).collect();
    let bottom_picks: Vec<u32> =
        z.bottom_singles().into_iter().filter(|e| top.contains(e)).collect();
    let m = SinglesSubset { owner: z.clone(), top_picks, bottom_picks };
    if &m.to_symbol() != s {
        return Err(Error::NoSpecialFamily(s.to_string()));
    }
    Ok((z, m))
}

/// All special symbols of the given rank and defect (defect must be 0 or 1).
pub fn enumerate_special(rank: u32, defect: i32) -> Vec<SpecialSymbol> {
    enumerate_symbols(rank, defect)
        .into_iter()
        .filter(is_special)
        .map(SpecialSymbol)
        .collect()
}

/// The paper's family-cardinality case table.
pub fn expected_family_size(z: &SpecialSymbol, kind: GroupKind) -> usize {
    let deg = z.degree();
    match kind {
        GroupKind::Sp | GroupKind::SOodd => 1usize << (2 * deg),
        GroupKind::Oplus => {
            if deg > 0 {
                1usize << (2 * deg - 1)
            } else {
                1
            }
        }
        GroupKind::Ominus => {
            if deg > 0 {
                1usize << (2 * deg - 1)
            } else {
                0
            }
        }
        GroupKind::SOplus => {
            if deg > 0 {
                1usize << (2 * deg - 2)
            } else {
                2
            }
        }
        GroupKind::SOminus => {
            if deg > 0 {
                1usize << (2 * deg - 2)
            } else {
                0
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::{enumerate_group_symbols, GroupTag};
    use std::collections::BTreeSet;

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    fn special(s: &str) -> SpecialSymbol {
        SpecialSymbol::new(sym(s)).unwrap()
    }

    #[test]
    fn is_special_examples() {
        assert!(is_special(&sym("2,0;1")));
        assert!(!is_special(&sym("1,0;2")));
        assert!(is_special(&sym("2;-")));
        assert!(is_special(&sym("1;1")));
        assert!(!is_special(&sym("-;2,1,0"))); // defect -3
    }

    #[test]
    fn singles_examples() {
        assert_eq!(special("2,0;1").singles(), sym("2,0;1"));
        assert_eq!(special("2,1;1").singles(), sym("2;-"));
        assert_eq!(special("2;-").singles(), sym("2;-"));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(special("2,0;1").degree(), 1);
        assert_eq!(special("2;-").degree(), 0);
        assert_eq!(special("1;0").degree(), 1);
    }

    #[test]
    fn lambda_of_subset_examples() {
        let z = special("2,0;1");
        let m = SinglesSubset::new(z.clone(), vec![0], vec![1]).unwrap();
        assert_eq!(m.to_symbol(), sym("2,1;0"));
        assert_eq!(SinglesSubset::empty(z.clone()).to_symbol(), sym("2,0;1"));
        let m = SinglesSubset::new(z.clone(), vec![2, 0], vec![1]).unwrap();
        assert_eq!(m.to_symbol(), sym("-;2,1,0"));
        // picks must be singles
        assert!(SinglesSubset::new(z, vec![1], vec![]).is_err());
    }

    #[test]
    fn family_worked_examples() {
        let z = special("2,0;1");
        let sp: BTreeSet<Symbol> =
            family(&z, GroupKind::Sp).unwrap().into_iter().map(|m| m.symbol).collect();
        assert_eq!(
            sp,
            ["2,0;1", "2,1;0", "1,0;2", "-;2,1,0"].iter().map(|s| sym(s)).collect()
        );
        let so: BTreeSet<Symbol> =
            family(&z, GroupKind::SOodd).unwrap().into_iter().map(|m| m.symbol).collect();
        assert_eq!(
            so,
            ["1;2,0", "0;2,1", "2;1,0", "2,1,0;-"].iter().map(|s| sym(s)).collect()
        );
        let z10 = special("1;0");
        let om: BTreeSet<Symbol> =
            family(&z10, GroupKind::Ominus).unwrap().into_iter().map(|m| m.symbol).collect();
        assert_eq!(om, ["-;1,0", "1,0;-"].iter().map(|s| sym(s)).collect());
        let op: BTreeSet<Symbol> =
            family(&z10, GroupKind::Oplus).unwrap().into_iter().map(|m| m.symbol).collect();
        assert_eq!(op, ["1;0", "0;1"].iter().map(|s| sym(s)).collect());
        // defect mismatch
        assert!(family(&z10, GroupKind::Sp).is_err());
    }

    #[test]
    fn pairing_examples() {
        let z = special("2,0;1");
        let m_21_0 = family_of_symbol(&sym("2,1;0")).unwrap().1;
        let m_10_2 = family_of_symbol(&sym("1,0;2")).unwrap().1;
        assert_eq!(pairing(&m_10_2, &m_21_0).unwrap(), 1);
        let empty = SinglesSubset::empty(z);
        for m in [&m_21_0, &m_10_2] {
            assert_eq!(pairing(m, &empty).unwrap(), 0);
        }
        let m_minus = family_of_symbol(&sym("-;1,0")).unwrap().1;
        let m_01 = family_of_symbol(&sym("0;1")).unwrap().1;
        assert_eq!(pairing(&m_minus, &m_01).unwrap(), 1);
        // owner mismatch is an error
        let other = family_of_symbol(&sym("2,0;1")).unwrap().1;
        assert!(pairing(&m_minus, &other).is_err());
    }

    #[test]
    fn family_of_symbol_examples() {
        let (z, m) = family_of_symbol(&sym("1,0;2")).unwrap();
        assert_eq!(z.symbol(), &sym("2,0;1"));
        assert_eq!((m.top_picks(), m.bottom_picks()), (&[2u32][..], &[1u32][..]));
        let (z, m) = family_of_symbol(&sym("2,0;1")).unwrap();
        assert_eq!(z.symbol(), &sym("2,0;1"));
        assert!(m.is_empty());
        let (z, m) = family_of_symbol(&sym("-;2,1,0")).unwrap();
        assert_eq!(z.symbol(), &sym("2,0;1"));
        assert_eq!((m.top_picks(), m.bottom_picks()), (&[2u32, 0][..], &[][..]));
    }

    #[test]
    fn transpose_is_complement() {
        for n in 0..=4 {
            for d0 in 0..=1 {
                for z in enumerate_special(n, d0) {
                    for m in z.all_subsets() {
                        assert_eq!(m.to_symbol().transpose(), m.complement().to_symbol());
                    }
                }
            }
        }
    }

    #[test]
    fn cardinality_table() {
        for n in 0..=5 {
            for kind in [
                GroupKind::Sp,
                GroupKind::SOodd,
                GroupKind::Oplus,
                GroupKind::Ominus,
                GroupKind::SOplus,
                GroupKind::SOminus,
            ] {
                for z in enumerate_special(n, kind.special_defect()) {
                    let fam = family(&z, kind).unwrap();
                    assert_eq!(
                        fam.len(),
                        expected_family_size(&z, kind),
                        "family size mismatch for Z={z} kind={kind}"
                    );
                }
            }
        }
    }

    #[test]
    fn families_partition_group_sets() {
        for n in 0..=4u32 {
            for kind in [
                GroupKind::Sp,
                GroupKind::SOodd,
                GroupKind::Oplus,
                GroupKind::Ominus,
                GroupKind::SOplus,
                GroupKind::SOminus,
            ] {
                let mut union: Vec<LabeledSymbol> = Vec::new();
                for z in enumerate_special(n, kind.special_defect()) {
                    for m in family(&z, kind).unwrap() {
                        union.push(LabeledSymbol { symbol: m.symbol, label: m.label });
                    }
                }
                union.sort();
                let dedup_len = union.len();
                union.dedup();
                assert_eq!(union.len(), dedup_len, "families overlap for {kind}:{n}");
                let mut expected = enumerate_group_symbols(GroupTag::new(kind, n));
                expected.sort();
                assert_eq!(union, expected, "disjoint union fails for {kind}:{n}");
            }
        }
    }

    #[test]
    fn family_membership_round_trip() {
        for n in 0..=4 {
            for d0 in 0..=1 {
                for z in enumerate_special(n, d0) {
                    for m in z.all_subsets() {
                        let s = m.to_symbol();
                        let (z2, m2) = family_of_symbol(&s).unwrap();
                        assert_eq!(&z2, m.owner());
                        assert_eq!(m2, m);
                    }
                }
            }
        }
    }
}
