//! Almost characters `R_Σ`, the Fourier-style coefficient
//! `⟨ρ_Λ, R_Σ⟩ = (±1)/c_Z`, uniform projections of the model basis, and the
//! exact Gram matrices that certify `{R_Σ}` is an orthonormal basis of the
//! uniform unipotent space.
//!
//! The `R_{T_w,1}` appearing in the Weyl-side data are formal basis labels:
//! every identity at this level is Weyl-group linear algebra, so no
//! finite-group computation happens anywhere.

use std::collections::BTreeMap;

use crate::partitions::BiPartition;
use crate::scalar::Sqrt2Rational;
use crate::special::{family_of_symbol, pairing, SpecialSymbol};
use crate::symbols::{enumerate_group_symbols, enumerate_symbols, GroupKind, GroupTag, LabeledSymbol, Symbol};
use crate::weyl::{character_table, enumerate_classes, group_order, inner_product, Domain, SignedClass};
use crate::Error;

/// Choice of representative for each `{Σ, Σ^t}` orbit in a defect-zero sharp
/// index set. All public results are either stated in a choice-invariant
/// form or carry the choice explicitly.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum OrientationPolicy {
    /// The lexicographically smaller of the pair (default).
    #[default]
    Lex,
    /// The representative whose top row is lexicographically larger.
    TopHeavy,
    /// The transpose of the `TopHeavy` representative.
    BottomHeavy,
}

impl OrientationPolicy {
    /// The chosen representative of `{s, s^t}`.
    pub fn orient(self, s: &Symbol) -> Symbol {
        let t = s.transpose();
        match self {
            OrientationPolicy::Lex => {
                if *s <= t {
                    s.clone()
                } else {
                    t
                }
            }
            OrientationPolicy::TopHeavy => {
                if s.top() >= t.top() {
                    s.clone()
                } else {
                    t
                }
            }
            OrientationPolicy::BottomHeavy => {
                if s.top() >= t.top() {
                    t
                } else {
                    s.clone()
                }
            }
        }
    }
}

/// An index `Σ` of an almost character, stored with the chosen orientation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AlmostCharacterIndex {
    pub sigma: Symbol,
}

impl std::fmt::Display for AlmostCharacterIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.sigma)
    }
}

/// The index set of the almost-character basis: defect-1 symbols for
/// `Sp`/`SO_odd`; orbit representatives of defect-0 symbols for plus-type
/// even groups; non-degenerate orbit representatives for minus type.
pub fn sharp_index_set(tag: GroupTag, policy: OrientationPolicy) -> Vec<AlmostCharacterIndex> {
    match tag.kind {
        GroupKind::Sp | GroupKind::SOodd => enumerate_symbols(tag.n, 1)
            .into_iter()
            .map(|sigma| AlmostCharacterIndex { sigma })
            .collect(),
        _ => {
            let minus = tag.kind.epsilon() == Some(-1);
            let mut out = Vec::new();
            for s in enumerate_symbols(tag.n, 0) {
                if s.is_degenerate() {
                    if !minus {
                        out.push(AlmostCharacterIndex { sigma: s });
                    }
                    continue;
                }
                let rep = policy.orient(&s);
                if rep == s {
                    out.push(AlmostCharacterIndex { sigma: rep });
                }
            }
            out
        }
    }
}

/// The normalization constant `c_Z` of a special family, as an exact
/// element of Q[sqrt 2]. It is a half-integer power of two depending on the
/// group kind and the degeneracy of `Z`.
pub fn c_z(z: &SpecialSymbol, kind: GroupKind) -> Sqrt2Rational {
    let deg = z.degree() as i32;
    let half_exponent = match kind {
        GroupKind::Sp | GroupKind::SOodd => 2 * deg,
        GroupKind::Oplus if z.is_degenerate() => 2 * deg,
        GroupKind::SOplus if z.is_degenerate() => 2 * deg + 1,
        // minus-type degenerate families are empty; the value is unused
        GroupKind::Ominus | GroupKind::SOminus if z.is_degenerate() => 2 * deg,
        _ => 2 * deg - 1,
    };
    Sqrt2Rational::pow2_half(half_exponent)
}

/// `⟨ρ_Λ, R_Σ⟩`: zero unless `Λ` and `Σ` lie in the same special family,
/// otherwise `(-1)^{⟨Λ,Σ⟩} / c_Z`.
pub fn fourier_coefficient(
    lambda: &Symbol,
    sigma: &AlmostCharacterIndex,
    tag: GroupTag,
) -> Sqrt2Rational {
    let (z1, m1) = match family_of_symbol(lambda) {
        Ok(v) => v,
        Err(_) => return Sqrt2Rational::zero(),
    };
    let (z2, m2) = match family_of_symbol(&sigma.sigma) {
        Ok(v) => v,
        Err(_) => return Sqrt2Rational::zero(),
    };
    if z1 != z2 {
        return Sqrt2Rational::zero();
    }
    let sign = if pairing(&m1, &m2).expect("same owner") == 0 {
        Sqrt2Rational::one()
    } else {
        -Sqrt2Rational::one()
    };
    sign * c_z(&z1, tag.kind).inv()
}

/// A vector in the uniform space, expressed over the almost-character basis
/// attached to a sharp index set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SharpVector {
    pub group: GroupTag,
    pub terms: Vec<(AlmostCharacterIndex, Sqrt2Rational)>,
}

impl SharpVector {
    pub fn coefficient(&self, sigma: &AlmostCharacterIndex) -> Sqrt2Rational {
        self.terms
            .iter()
            .find(|(s, _)| s == sigma)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Sqrt2Rational::zero)
    }

    /// Nonzero terms, for display.
    pub fn support(&self) -> Vec<(AlmostCharacterIndex, Sqrt2Rational)> {
        self.terms.iter().filter(|(_, c)| !c.is_zero()).cloned().collect()
    }
}

/// A vector in the unipotent model space over the `ρ_Λ` basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnipotentVector {
    pub group: GroupTag,
    pub coeffs: BTreeMap<LabeledSymbol, Sqrt2Rational>,
}

impl UnipotentVector {
    pub fn zero(group: GroupTag) -> Self {
        UnipotentVector { group, coeffs: BTreeMap::new() }
    }

    pub fn basis(group: GroupTag, symbol: LabeledSymbol) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(symbol, Sqrt2Rational::one());
        UnipotentVector { group, coeffs }
    }

    pub fn add_term(&mut self, symbol: LabeledSymbol, c: Sqrt2Rational) {
        let entry = self.coeffs.entry(symbol).or_insert_with(Sqrt2Rational::zero);
        *entry += c;
    }

    pub fn normalize(&mut self) {
        self.coeffs.retain(|_, c| !c.is_zero());
    }
}

/// `ρ_Λ^♯` as a coefficient vector over the sharp index set.
pub fn uniform_projection(
    lambda: &Symbol,
    tag: GroupTag,
    policy: OrientationPolicy,
) -> SharpVector {
    let terms = sharp_index_set(tag, policy)
        .into_iter()
        .map(|sigma| {
            let c = fourier_coefficient(lambda, &sigma, tag);
            (sigma, c)
        })
        .collect();
    SharpVector { group: tag, terms }
}

/// Expands a sharp vector back into the `ρ_Λ` basis using the same Fourier
/// coefficients. The result is independent of the orientation policy used
/// to build the sharp vector.
pub fn expand_in_model_basis(v: &SharpVector) -> UnipotentVector {
    let mut out = UnipotentVector::zero(v.group);
    for labeled in enumerate_group_symbols(v.group) {
        let mut acc = Sqrt2Rational::zero();
        for (sigma, c) in &v.terms {
            if c.is_zero() {
                continue;
            }
            acc += c.clone() * fourier_coefficient(&labeled.symbol, sigma, v.group);
        }
        if !acc.is_zero() {
            out.coeffs.insert(labeled, acc);
        }
    }
    out
}

/// Orthogonal projection of a model vector onto the span of the almost
/// characters, computed in the `ρ_Λ` basis.
pub fn project_model_vector(v: &UnipotentVector, policy: OrientationPolicy) -> UnipotentVector {
    let mut sharp_terms = Vec::new();
    for sigma in sharp_index_set(v.group, policy) {
        let mut ip = Sqrt2Rational::zero();
        for (labeled, c) in &v.coeffs {
            ip += c.clone() * fourier_coefficient(&labeled.symbol, &sigma, v.group);
        }
        sharp_terms.push((sigma, ip));
    }
    let mut out = expand_in_model_basis(&SharpVector { group: v.group, terms: sharp_terms });
    out.normalize();
    out
}

/// The Weyl-side description of an almost character: the coefficient of the
/// formal basis label `R_{T_w,1}` for each class `w` of the stated domain.
#[derive(Clone, Debug)]
pub struct AlmostWeylData {
    pub domain: Domain,
    pub terms: Vec<(SignedClass, Sqrt2Rational)>,
}

/// The bipartition whose `W_n`-character enters the averaged sum for `Σ`
/// (the transpose is used on the odd orthogonal side).
fn weyl_bipartition(sigma: &AlmostCharacterIndex, kind: GroupKind) -> BiPartition {
    match kind {
        GroupKind::SOodd => sigma.sigma.transpose().upsilon(),
        _ => sigma.sigma.upsilon(),
    }
}

/// Coefficients of `R_Σ` over the torus labels, grouped per class.
pub fn almost_character_weyl_data(sigma: &AlmostCharacterIndex, tag: GroupTag) -> AlmostWeylData {
    let table = character_table(tag.n);
    let bp = weyl_bipartition(sigma, tag.kind);
    let (domain, factor) = match tag.kind {
        GroupKind::Sp | GroupKind::SOodd => (
            Domain::Full,
            Sqrt2Rational::from_ratio(1, group_order(tag.n) as i64),
        ),
        kind => {
            let domain = if kind.epsilon() == Some(1) { Domain::Plus } else { Domain::Minus };
            let coset_order = (group_order(tag.n) / 2).max(1) as i64;
            let mut factor = Sqrt2Rational::from_ratio(1, coset_order);
            if kind.epsilon() == Some(1) && sigma.sigma.is_degenerate() {
                factor = factor * Sqrt2Rational::pow2_half(-1);
            }
            if matches!(kind, GroupKind::Oplus | GroupKind::Ominus) {
                factor = factor * Sqrt2Rational::pow2_half(-1);
            }
            (domain, factor)
        }
    };
    let mut terms = Vec::new();
    for class in enumerate_classes(tag.n) {
        let keep = match domain {
            Domain::Full => true,
            Domain::Plus => class.in_plus(),
            Domain::Minus => !class.in_plus(),
        };
        if !keep {
            continue;
        }
        let value = table.value(&bp, &class);
        let coeff = factor.clone()
            * Sqrt2Rational::from_int(class.size() as i64)
            * Sqrt2Rational::from_int(value);
        terms.push((class, coeff));
    }
    AlmostWeylData { domain, terms }
}

/// Pairwise inner products of the almost characters, computed purely from
/// Weyl-group inner products case by case. Exactly the identity matrix when
/// the basis claim holds.
pub fn gram_matrix(
    tag: GroupTag,
    policy: OrientationPolicy,
) -> Result<Vec<Vec<Sqrt2Rational>>, Error> {
    let sharp = sharp_index_set(tag, policy);
    let table = character_table(tag.n);
    let chars: Vec<_> = sharp
        .iter()
        .map(|s| table.class_function(&weyl_bipartition(s, tag.kind)))
        .collect();
    let mut out = Vec::with_capacity(sharp.len());
    for (i, si) in sharp.iter().enumerate() {
        let mut row = Vec::with_capacity(sharp.len());
        for (j, sj) in sharp.iter().enumerate() {
            let entry = match tag.kind {
                GroupKind::Sp | GroupKind::SOodd => {
                    inner_product(&chars[i], &chars[j], Domain::Full)?
                }
                kind if kind.epsilon() == Some(1) => {
                    let mut v = inner_product(&chars[i], &chars[j], Domain::Plus)?;
                    if si.sigma.is_degenerate() {
                        v = v * Sqrt2Rational::pow2_half(-1);
                    }
                    if sj.sigma.is_degenerate() {
                        v = v * Sqrt2Rational::pow2_half(-1);
                    }
                    v
                }
                _ => inner_product(&chars[i], &chars[j], Domain::Minus)?,
            };
            row.push(entry);
        }
        out.push(row);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    fn idx(s: &str) -> AlmostCharacterIndex {
        AlmostCharacterIndex { sigma: sym(s) }
    }

    fn tag(kind: GroupKind, n: u32) -> GroupTag {
        GroupTag::new(kind, n)
    }

    #[test]
    fn sharp_sets_match_worked_examples() {
        let sp4: BTreeSet<String> = sharp_index_set(tag(GroupKind::Sp, 2), OrientationPolicy::Lex)
            .iter()
            .map(|s| s.to_string())
            .collect();
        let expected: BTreeSet<String> = ["2;-", "2,1,0;2,1", "2,1;0", "2,0;1", "1,0;2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(sp4, expected);

        // the worked example's choice for O^-_4
        let om4: BTreeSet<String> =
            sharp_index_set(tag(GroupKind::Ominus, 2), OrientationPolicy::BottomHeavy)
                .iter()
                .map(|s| s.to_string())
                .collect();
        let expected: BTreeSet<String> =
            ["0;2", "1,0;2,1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(om4, expected);

        // the worked example's choice for O^+_4
        let op4: BTreeSet<String> =
            sharp_index_set(tag(GroupKind::Oplus, 2), OrientationPolicy::TopHeavy)
                .iter()
                .map(|s| s.to_string())
                .collect();
        let expected: BTreeSet<String> =
            ["2;0", "2,1;1,0", "1;1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(op4, expected);

        // one orbit at rank 1
        let op2 = sharp_index_set(tag(GroupKind::Oplus, 1), OrientationPolicy::TopHeavy);
        assert_eq!(op2, vec![idx("1;0")]);
    }

    #[test]
    fn fourier_coefficient_examples() {
        let sp = tag(GroupKind::Sp, 2);
        assert_eq!(
            fourier_coefficient(&sym("2,1;0"), &idx("1,0;2"), sp),
            -Sqrt2Rational::from_ratio(1, 2)
        );
        assert!(fourier_coefficient(&sym("2;-"), &idx("2,0;1"), sp).is_zero());
        let op = tag(GroupKind::Oplus, 2);
        assert_eq!(
            fourier_coefficient(&sym("1;1"), &idx("1;1"), op),
            Sqrt2Rational::one()
        );
    }

    #[test]
    fn uniform_projection_examples() {
        let sp = tag(GroupKind::Sp, 2);
        let proj = uniform_projection(&sym("-;2,1,0"), sp, OrientationPolicy::Lex);
        let half = Sqrt2Rational::from_ratio(1, 2);
        assert_eq!(proj.coefficient(&idx("2,0;1")), half.clone());
        assert_eq!(proj.coefficient(&idx("2,1;0")), -half.clone());
        assert_eq!(proj.coefficient(&idx("1,0;2")), -half.clone());
        assert!(proj.coefficient(&idx("2;-")).is_zero());
        assert!(proj.coefficient(&idx("2,1,0;2,1")).is_zero());

        // degree-zero family: the projection is a single almost character
        let proj = uniform_projection(&sym("2;-"), sp, OrientationPolicy::Lex);
        assert_eq!(proj.support(), vec![(idx("2;-"), Sqrt2Rational::one())]);

        // O^+_2: coefficient 1/sqrt2
        let proj =
            uniform_projection(&sym("1;0"), tag(GroupKind::Oplus, 1), OrientationPolicy::TopHeavy);
        assert_eq!(
            proj.support(),
            vec![(idx("1;0"), Sqrt2Rational::pow2_half(-1))]
        );
    }

    #[test]
    fn worked_example_projections_all_four() {
        let sp = tag(GroupKind::Sp, 2);
        let half = Sqrt2Rational::from_ratio(1, 2);
        let cases = [
            ("2,0;1", [1, 1, 1]),
            ("2,1;0", [1, 1, -1]),
            ("1,0;2", [1, -1, 1]),
            ("-;2,1,0", [1, -1, -1]),
        ];
        for (lambda, signs) in cases {
            let proj = uniform_projection(&sym(lambda), sp, OrientationPolicy::Lex);
            for (sigma, sgn) in ["2,0;1", "2,1;0", "1,0;2"].iter().zip(signs) {
                let expected = if sgn > 0 { half.clone() } else { -half.clone() };
                assert_eq!(proj.coefficient(&idx(sigma)), expected, "{lambda} at {sigma}");
            }
        }
    }

    #[test]
    fn weyl_data_examples() {
        // Sp_4, Σ = (2;-): (1/8)[1,2,1,2,2] in canonical class order
        let data = almost_character_weyl_data(&idx("2;-"), tag(GroupKind::Sp, 2));
        let eighth = Sqrt2Rational::from_ratio(1, 8);
        let expected: Vec<i64> = vec![1, 2, 1, 2, 2];
        assert_eq!(data.terms.len(), 5);
        for ((_, coeff), e) in data.terms.iter().zip(expected) {
            assert_eq!(coeff.clone(), eighth.clone() * Sqrt2Rational::from_int(e));
        }

        // O^+_4, Σ = (1;1): (1/4)[R_{T_1} - R_{T_3}] over the plus classes
        let data = almost_character_weyl_data(&idx("1;1"), tag(GroupKind::Oplus, 2));
        assert_eq!(data.domain, Domain::Plus);
        let quarter = Sqrt2Rational::from_ratio(1, 4);
        let by_class: Vec<(String, Sqrt2Rational)> =
            data.terms.iter().map(|(c, v)| (c.to_string(), v.clone())).collect();
        assert_eq!(
            by_class,
            vec![
                ("(1,1|-)".to_string(), quarter.clone()),
                ("(-|1,1)".to_string(), -quarter.clone()),
                ("(2|-)".to_string(), Sqrt2Rational::zero()),
            ]
        );

        // odd orthogonal side uses the transposed symbol's bipartition
        let data = almost_character_weyl_data(&idx("1,0;1"), tag(GroupKind::SOodd, 1));
        // Υ((1,0;1)^t) = Υ((1;1,0)) = [1;-]: the trivial character of W_1
        let whole = Sqrt2Rational::from_ratio(1, 4);
        assert_eq!(data.terms[0].1, whole.clone());
        assert_eq!(data.terms[1].1, whole);
    }

    #[test]
    fn o_minus_4_projection_signs_match_worked_example() {
        // (1_{O^-_4})^♯ = -(1/sqrt2) R_{(0;2)} under the example's choice
        let om = tag(GroupKind::Ominus, 2);
        let proj = uniform_projection(&sym("-;2,0"), om, OrientationPolicy::BottomHeavy);
        assert_eq!(
            proj.support(),
            vec![(idx("0;2"), -Sqrt2Rational::pow2_half(-1))]
        );
        let proj = uniform_projection(&sym("1;2,1,0"), om, OrientationPolicy::BottomHeavy);
        assert_eq!(
            proj.support(),
            vec![(idx("1,0;2,1"), -Sqrt2Rational::pow2_half(-1))]
        );
    }

    #[test]
    fn gram_small_identity() {
        for kind in [
            GroupKind::Sp,
            GroupKind::SOodd,
            GroupKind::Oplus,
            GroupKind::Ominus,
            GroupKind::SOplus,
            GroupKind::SOminus,
        ] {
            for n in 0..=2 {
                let g = gram_matrix(tag(kind, n), OrientationPolicy::Lex).unwrap();
                for (i, row) in g.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        let expected = if i == j {
                            Sqrt2Rational::one()
                        } else {
                            Sqrt2Rational::zero()
                        };
                        assert_eq!(*v, expected, "gram[{i}][{j}] for {kind}:{n}");
                    }
                }
            }
        }
    }

    #[test]
    fn projection_choice_invariance() {
        for kind in [GroupKind::Oplus, GroupKind::Ominus, GroupKind::SOplus, GroupKind::SOminus] {
            for n in 0..=3 {
                let t = tag(kind, n);
                for labeled in enumerate_group_symbols(t) {
                    let a = expand_in_model_basis(&uniform_projection(
                        &labeled.symbol,
                        t,
                        OrientationPolicy::Lex,
                    ));
                    let b = expand_in_model_basis(&uniform_projection(
                        &labeled.symbol,
                        t,
                        OrientationPolicy::TopHeavy,
                    ));
                    assert_eq!(a, b, "projection depends on orientation for {labeled} in {t}");
                }
            }
        }
    }

    #[test]
    fn coefficient_columns_are_orthonormal() {
        // Independent route to the Gram identity: the finite Fourier matrix
        // of each family has orthonormal columns.
        for kind in [
            GroupKind::Sp,
            GroupKind::SOodd,
            GroupKind::Oplus,
            GroupKind::Ominus,
            GroupKind::SOplus,
            GroupKind::SOminus,
        ] {
            for n in 0..=3 {
                let t = tag(kind, n);
                let sharp = sharp_index_set(t, OrientationPolicy::Lex);
                let symbols = enumerate_group_symbols(t);
                for si in &sharp {
                    for sj in &sharp {
                        let mut acc = Sqrt2Rational::zero();
                        for l in &symbols {
                            acc += fourier_coefficient(&l.symbol, si, t)
                                * fourier_coefficient(&l.symbol, sj, t);
                        }
                        let expected = if si == sj {
                            Sqrt2Rational::one()
                        } else {
                            Sqrt2Rational::zero()
                        };
                        assert_eq!(acc, expected, "columns {si},{sj} of {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn injectivity_small() {
        for kind in [GroupKind::Sp, GroupKind::SOodd] {
            for n in 0..=3 {
                let t = tag(kind, n);
                let projections: Vec<_> = enumerate_group_symbols(t)
                    .into_iter()
                    .map(|l| uniform_projection(&l.symbol, t, OrientationPolicy::Lex))
                    .collect();
                for i in 0..projections.len() {
                    for j in (i + 1)..projections.len() {
                        assert_ne!(projections[i], projections[j]);
                    }
                }
            }
        }
    }
}
