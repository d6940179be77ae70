//! The symbol-level theta relation between even orthogonal and symplectic
//! groups, first occurrence along the symplectic tower, the induction
//! relation Ω on symbols, and the constructive rank descent used to pin
//! parametrizations of plus-type even orthogonal groups.

use crate::partitions::{interleaves, BiPartition};
use crate::symbols::{enumerate_group_symbols, GroupKind, GroupTag, Symbol};
use crate::Error;

/// The relation `B` between an even orthogonal symbol (left, sign `eps`)
/// and a symplectic symbol (right): two interleaving conditions on the
/// bipartition invariants plus a defect equation.
pub fn in_theta_relation(lambda: &Symbol, lambdap: &Symbol, eps: i32) -> bool {
    assert!(eps == 1 || eps == -1, "eps must be ±1");
    let l = lambda.upsilon();
    let r = lambdap.upsilon();
    if eps == 1 {
        lambdap.defect() == -lambda.defect() + 1
            && interleaves(&l.bottom, &r.top)
            && interleaves(&r.bottom, &l.top)
    } else {
        lambdap.defect() == -lambda.defect() - 1
            && interleaves(&l.top, &r.bottom)
            && interleaves(&r.top, &l.bottom)
    }
}

/// All symplectic symbols of rank `nprime` related to `lambda`.
pub fn theta_partners(lambda: &Symbol, eps: i32, nprime: u32) -> Vec<Symbol> {
    enumerate_group_symbols(GroupTag::new(GroupKind::Sp, nprime))
        .into_iter()
        .map(|l| l.symbol)
        .filter(|s| in_theta_relation(lambda, s, eps))
        .collect()
}

/// Search bound for first occurrence: the defect equation pins the partner
/// defect, and a partner always exists once the rank admits the pinned
/// defect together with the interleaving-minimal bipartition.
pub fn first_occurrence_bound(lambda: &Symbol) -> u32 {
    let d = lambda.defect().unsigned_abs();
    lambda.rank() + (d + 3) * (d + 3) / 4 + 1
}

/// The minimal symplectic tower index at which `lambda` occurs.
pub fn first_occurrence(lambda: &Symbol, eps: i32) -> u32 {
    let bound = first_occurrence_bound(lambda);
    for nprime in 0..=bound {
        if !theta_partners(lambda, eps, nprime).is_empty() {
            return nprime;
        }
    }
    unreachable!("first occurrence of {lambda} not found within bound {bound}");
}

/// The parabolic-induction relation on symbols: same defect, bipartition
/// invariant grown by one box in either row.
pub fn omega(lambda: &Symbol, kind: GroupKind) -> Vec<Symbol> {
    debug_assert_eq!(
        lambda.defect().rem_euclid(4),
        kind.defect_residue(),
        "symbol defect does not match the group kind"
    );
    let bp = lambda.upsilon();
    let d = lambda.defect();
    let mut out = Vec::new();
    for top in bp.top.add_one_box() {
        out.push(Symbol::upsilon_inverse(&BiPartition::new(top, bp.bottom.clone()), d));
    }
    for bottom in bp.bottom.add_one_box() {
        out.push(Symbol::upsilon_inverse(&BiPartition::new(bp.top.clone(), bottom), d));
    }
    out.sort();
    out.dedup();
    out
}

/// For a non-degenerate defect-zero symbol of rank `n >= 2`, produces a
/// defect-zero symbol of rank `n-1` whose induction set contains the symbol
/// but not its transpose. Follows a case split on the last index where the
/// two rows differ.
pub fn descend_o_plus(lambda: &Symbol) -> Result<Symbol, Error> {
    if lambda.defect() != 0 {
        return Err(Error::Precondition(format!("{lambda} does not have defect 0")));
    }
    if lambda.is_degenerate() {
        return Err(Error::Precondition(format!("{lambda} is degenerate")));
    }
    if lambda.rank() < 2 {
        return Err(Error::Precondition(format!(
            "{lambda} has rank {} < 2; no descent exists",
            lambda.rank()
        )));
    }
    let a = lambda.top();
    let b = lambda.bottom();
    let m = a.len();
    debug_assert_eq!(m, b.len());
    // largest 1-based index with a_i != b_i
    let i = (0..m).rev().find(|&i| a[i] != b[i]).expect("non-degenerate") + 1;

    let mut top = a.to_vec();
    let mut bottom = b.to_vec();
    if i == m && m == 1 {
        let (a1, b1) = (a[0], b[0]);
        if (a1 >= 2 && b1 == 0) || (b1 > a1 && a1 >= 1) {
            top[0] -= 1;
        } else {
            bottom[0] -= 1;
        }
    } else if i == m {
        if a[m - 1] > b[m - 1] {
            if b[m - 2] >= a[m - 2] {
                bottom[m - 2] -= 1;
            } else {
                top[m - 1] -= 1;
            }
        } else if a[m - 2] >= b[m - 2] {
            top[m - 2] -= 1;
        } else {
            bottom[m - 1] -= 1;
        }
    } else if a[i - 1] > b[i - 1] {
        top[i - 1] -= 1;
    } else {
        bottom[i - 1] -= 1;
    }
    let result = Symbol::new(top, bottom)?;
    debug_assert_eq!(result.rank() + 1, lambda.rank());
    debug_assert_eq!(result.defect(), 0);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::{enumerate_symbols, lambda_o_i, lambda_o_ii, lambda_so_odd, lambda_sp};
    use std::collections::BTreeSet;

    fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Symbol> {
        items.iter().map(|s| sym(s)).collect()
    }

    #[test]
    fn relation_examples() {
        assert!(in_theta_relation(&sym("1;0"), &sym("0;-"), 1));
        assert!(!in_theta_relation(&sym("0;1"), &sym("0;-"), 1));
        assert!(in_theta_relation(&sym("0;1"), &sym("1;-"), 1));
        assert!(in_theta_relation(&sym("-;1,0"), &sym("0;-"), -1));
    }

    #[test]
    fn partners_examples() {
        assert_eq!(theta_partners(&sym("1;0"), 1, 0), vec![sym("0;-")]);
        // defect -3 partners need rank >= 2
        assert!(theta_partners(&lambda_o_i(2), 1, 1).is_empty());
        assert!(!theta_partners(&sym("1;0"), 1, 1).is_empty());
    }

    #[test]
    fn first_occurrence_examples() {
        assert_eq!(first_occurrence(&sym("1;0"), 1), 0);
        assert_eq!(first_occurrence(&sym("0;1"), 1), 1);
        for k in 1..=3u32 {
            let eps = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(first_occurrence(&lambda_o_i(k), eps), k * (k - 1), "I at k={k}");
            assert_eq!(first_occurrence(&lambda_o_ii(k), eps), k * (k + 1), "II at k={k}");
        }
        for k in 0..=3u32 {
            assert_eq!(lambda_sp(k).rank(), k * (k + 1));
            assert_eq!(lambda_so_odd(k).rank(), k * (k + 1));
        }
    }

    #[test]
    fn stability() {
        for n in 0..=3u32 {
            for kind in [GroupKind::Oplus, GroupKind::Ominus] {
                let eps = kind.epsilon().unwrap();
                for l in enumerate_group_symbols(GroupTag::new(kind, n)) {
                    let first = first_occurrence(&l.symbol, eps);
                    for np in first..=first + 3 {
                        assert!(
                            !theta_partners(&l.symbol, eps, np).is_empty(),
                            "occurrence not stable for {} at {np}",
                            l.symbol
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn transpose_first_occurrence_dichotomy() {
        for n in 0..=3u32 {
            for kind in [GroupKind::Oplus, GroupKind::Ominus] {
                let eps = kind.epsilon().unwrap();
                for l in enumerate_group_symbols(GroupTag::new(kind, n)) {
                    if l.symbol.is_degenerate() {
                        continue;
                    }
                    let a = first_occurrence(&l.symbol, eps);
                    let b = first_occurrence(&l.symbol.transpose(), eps);
                    assert_ne!(a, b, "transpose pair {} occurs at the same index", l.symbol);
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        let got: BTreeSet<_> = omega(&sym("2,0;1"), GroupKind::Sp).into_iter().collect();
        assert_eq!(got, set(&["3,0;1", "2,1;1", "2,0;2", "3,1,0;2,1"]));
        let got: BTreeSet<_> = omega(&sym("-;-"), GroupKind::Oplus).into_iter().collect();
        assert_eq!(got, set(&["1;0", "0;1"]));
        let got: BTreeSet<_> = omega(&sym("1;-"), GroupKind::Sp).into_iter().collect();
        assert_eq!(got, set(&["2;-", "2,1;0", "2,0;1"]));
        let got: BTreeSet<_> = omega(&sym("1,0;1"), GroupKind::Sp).into_iter().collect();
        assert_eq!(got, set(&["2,0;1", "1,0;2", "2,1,0;2,1"]));
    }

    #[test]
    fn omega_preserves_defect_and_excludes_transposes() {
        for n in 0..=4 {
            for d in [-3, -2, 0, 1, 2, 3] {
                for s in enumerate_symbols(n, d) {
                    let kind = match d.rem_euclid(4) {
                        0 => GroupKind::Oplus,
                        1 => GroupKind::Sp,
                        2 => GroupKind::Ominus,
                        _ => GroupKind::SOodd,
                    };
                    let next = omega(&s, kind);
                    for t in &next {
                        assert_eq!(t.defect(), s.defect());
                        assert_eq!(t.rank(), s.rank() + 1);
                        if t.defect() != 0 {
                            assert!(!next.contains(&t.transpose()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn descend_examples() {
        assert_eq!(descend_o_plus(&sym("2;0")).unwrap(), sym("1;0"));
        let l = sym("2,1;1,0");
        let d = descend_o_plus(&l).unwrap();
        assert!(omega(&d, GroupKind::Oplus).contains(&l));
        assert!(!omega(&d, GroupKind::Oplus).contains(&l.transpose()));
        assert!(descend_o_plus(&sym("1;0")).is_err());
        assert!(descend_o_plus(&sym("1;1")).is_err());
    }

    #[test]
    fn descend_postconditions_up_to_rank8() {
        for n in 2..=8u32 {
            for s in enumerate_symbols(n, 0) {
                if s.is_degenerate() {
                    continue;
                }
                let d = descend_o_plus(&s).unwrap_or_else(|e| panic!("descent failed for {s}: {e}"));
                assert_eq!(d.rank(), n - 1);
                let up = omega(&d, GroupKind::Oplus);
                assert!(up.contains(&s), "descent of {s} gave {d}, not below it");
                assert!(!up.contains(&s.transpose()), "descent of {s} fails to exclude transpose");
            }
        }
    }
}
