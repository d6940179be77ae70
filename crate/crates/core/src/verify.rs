//! Exhaustive small-rank verification suites. Each suite walks a bounded
//! search space, checks a structural claim on every point, and reports one
//! pass/fail line per unit of work. The command-line `verify` subcommands
//! and the acceptance tests both run these.

use crate::almost::{
    expand_in_model_basis, gram_matrix, sharp_index_set, uniform_projection, OrientationPolicy,
};
use crate::cells::{cell, enumerate_arrangements, find_separating_cell, PairSubset};
use crate::lusztig::{
    conjugate_action, sgn_action, spinor_action, theta_coordinates_sp_oeven,
    theta_coordinates_sp_soodd, uniform_fiber, CentralizerDescriptor, ParamTriple,
};
use crate::partitions::Partition;
use crate::scalar::Sqrt2Rational;
use crate::special::{enumerate_special, expected_family_size, family, pairing};
use crate::symbols::{
    enumerate_group_symbols, enumerate_symbols, lambda_o_i, lambda_o_ii, lambda_so_odd, lambda_sp,
    GroupKind, GroupTag, Symbol,
};
use crate::theta::{descend_o_plus, first_occurrence, omega, theta_partners};

/// One checked unit of work.
#[derive(Clone, Debug)]
pub struct ReportLine {
    pub label: String,
    pub pass: bool,
    pub detail: Option<String>,
}

/// Outcome of one verification suite.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub lines: Vec<ReportLine>,
}

impl Report {
    pub fn check(&mut self, label: impl Into<String>, pass: bool) {
        self.lines.push(ReportLine { label: label.into(), pass, detail: None });
    }

    pub fn check_with(&mut self, label: impl Into<String>, pass: bool, detail: String) {
        let detail = if pass { None } else { Some(detail) };
        self.lines.push(ReportLine { label: label.into(), pass, detail });
    }

    pub fn ok(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> Vec<&ReportLine> {
        self.lines.iter().filter(|l| !l.pass).collect()
    }

    pub fn merge(&mut self, other: Report) {
        self.lines.extend(other.lines);
    }
}

const ALL_KINDS: [GroupKind; 6] = [
    GroupKind::Sp,
    GroupKind::SOodd,
    GroupKind::Oplus,
    GroupKind::Ominus,
    GroupKind::SOplus,
    GroupKind::SOminus,
];

/// Transpose invariance of the pairing in the first slot, and the
/// equal/unequal behaviour under transposing the second slot by orthogonal
/// sign, over every special symbol of rank up to the bound.
pub fn pairing_lemma(max_rank: u32) -> Report {
    let mut report = Report::default();
    for kind in ALL_KINDS {
        let d0 = kind.special_defect();
        for rank in 0..=max_rank {
            let mut pass = true;
            let mut detail = String::new();
            for z in enumerate_special(rank, d0) {
                let members = match family(&z, kind) {
                    Ok(m) => m,
                    Err(_) => continue,
                };
                let sharp_subsets: Vec<_> = z
                    .all_subsets()
                    .into_iter()
                    .filter(|m| m.to_symbol().defect() == d0)
                    .collect();
                for lam in &members {
                    for sig in &sharp_subsets {
                        let a = pairing(&lam.subset, sig).unwrap();
                        let b = pairing(&lam.subset.complement(), sig).unwrap();
                        if a != b {
                            pass = false;
                            detail = format!(
                                "first-slot transpose fails: Z={z} Λ={} Σ={}",
                                lam.symbol,
                                sig.to_symbol()
                            );
                        }
                        if let Some(eps) = kind.epsilon() {
                            let c = pairing(&lam.subset, &sig.complement()).unwrap();
                            let expect_equal = eps == 1;
                            if (a == c) != expect_equal {
                                pass = false;
                                detail = format!(
                                    "second-slot rule fails: Z={z} Λ={} Σ={}",
                                    lam.symbol,
                                    sig.to_symbol()
                                );
                            }
                        }
                    }
                }
            }
            report.check_with(format!("pairing {kind} rank {rank}"), pass, detail);
        }
    }
    report
}

/// Family cardinalities against the case table, including emptiness of
/// minus-type degree-zero families.
pub fn cardinality(max_rank: u32) -> Report {
    let mut report = Report::default();
    for kind in ALL_KINDS {
        for rank in 0..=max_rank {
            let mut pass = true;
            let mut detail = String::new();
            for z in enumerate_special(rank, kind.special_defect()) {
                let got = family(&z, kind).map(|f| f.len()).unwrap_or(usize::MAX);
                let want = expected_family_size(&z, kind);
                if got != want {
                    pass = false;
                    detail = format!("Z={z}: |family| = {got}, expected {want}");
                }
            }
            report.check_with(format!("cardinality {kind} rank {rank}"), pass, detail);
        }
    }
    report
}

fn is_identity(m: &[Vec<Sqrt2Rational>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, v)| {
            let expected = if i == j { Sqrt2Rational::one() } else { Sqrt2Rational::zero() };
            *v == expected
        })
    })
}

/// Gram matrices of the almost-character bases are identity matrices.
pub fn gram(max_n: u32) -> Report {
    let mut report = Report::default();
    for kind in ALL_KINDS {
        for n in 0..=max_n {
            let tag = GroupTag::new(kind, n);
            let g = gram_matrix(tag, OrientationPolicy::Lex).expect("gram computes");
            report.check(format!("gram {tag} ({} almost characters)", g.len()), is_identity(&g));
        }
    }
    report
}

/// Injectivity of the uniform projection for the connected kinds and the
/// transpose-fiber law for the even orthogonal groups.
pub fn fibers(max_n: u32) -> Report {
    let mut report = Report::default();
    for n in 0..=max_n {
        for kind in [GroupKind::Sp, GroupKind::SOodd] {
            let tag = GroupTag::new(kind, n);
            let symbols: Vec<Symbol> =
                enumerate_group_symbols(tag).into_iter().map(|l| l.symbol).collect();
            let projections: Vec<_> = symbols
                .iter()
                .map(|s| uniform_projection(s, tag, OrientationPolicy::Lex))
                .collect();
            let mut pass = true;
            for i in 0..symbols.len() {
                for j in (i + 1)..symbols.len() {
                    if projections[i] == projections[j] {
                        pass = false;
                    }
                }
            }
            report.check(format!("projection injective {tag}"), pass);
        }
        for kind in [GroupKind::Oplus, GroupKind::Ominus] {
            let tag = GroupTag::new(kind, n);
            let symbols: Vec<Symbol> =
                enumerate_group_symbols(tag).into_iter().map(|l| l.symbol).collect();
            let projections: Vec<_> = symbols
                .iter()
                .map(|s| uniform_projection(s, tag, OrientationPolicy::Lex))
                .collect();
            let mut pass = true;
            for i in 0..symbols.len() {
                for j in 0..symbols.len() {
                    let expect = symbols[i] == symbols[j] || symbols[i] == symbols[j].transpose();
                    if (projections[i] == projections[j]) != expect {
                        pass = false;
                    }
                }
            }
            report.check(format!("projection fibers {tag}"), pass);
        }
    }
    report
}

/// Cell uniformity, transpose closure and pairwise separation over every
/// special symbol of rank up to the bound, one line per `(Z, Φ, Ψ)`.
pub fn cells_suite(kind: GroupKind, max_rank: u32) -> Report {
    let mut report = Report::default();
    let d0 = kind.special_defect();
    for rank in 0..=max_rank {
        let tag = GroupTag::new(kind, rank);
        for z in enumerate_special(rank, d0) {
            for phi in enumerate_arrangements(&z) {
                for psi in PairSubset::all_of(&phi) {
                    if kind.is_even_orthogonal() && !psi.is_admissible(kind) {
                        continue;
                    }
                    let members = cell(&psi, tag).expect("admissible cell");
                    let mut pass =
                        crate::cells::vector_is_uniform(tag, &members);
                    if kind.is_even_orthogonal() {
                        pass &= members.iter().all(|s| members.contains(&s.transpose()));
                    }
                    report.check(format!("cell Z={z} Φ={phi} Ψ={psi} ({tag})"), pass);
                }
            }
            // separation of every eligible pair in this family
            let members: Vec<Symbol> = family(&z, kind)
                .expect("anchored family")
                .into_iter()
                .map(|m| m.symbol)
                .collect();
            let mut pass = true;
            let mut detail = String::new();
            for a in &members {
                for b in &members {
                    if a >= b || (kind.is_even_orthogonal() && *a == b.transpose()) {
                        continue;
                    }
                    match find_separating_cell(a, b, tag) {
                        Ok((_, p1, p2)) => {
                            let c1 = cell(&p1, tag).expect("witness cell");
                            let c2 = cell(&p2, tag).expect("witness cell");
                            if !c1.contains(a)
                                || !c2.contains(b)
                                || c1.iter().any(|s| c2.contains(s))
                            {
                                pass = false;
                                detail = format!("bad witness for {a}, {b}");
                            }
                        }
                        Err(e) => {
                            pass = false;
                            detail = format!("no witness for {a}, {b}: {e}");
                        }
                    }
                }
            }
            report.check_with(format!("separation Z={z} ({tag})"), pass, detail);
        }
    }
    report
}

/// The constructive descent: every non-degenerate defect-zero symbol of
/// rank 2..=max descends to a predecessor containing it but not its
/// transpose.
pub fn descent(max_rank: u32) -> Report {
    let mut report = Report::default();
    for n in 2..=max_rank {
        let mut pass = true;
        let mut detail = String::new();
        for s in enumerate_symbols(n, 0) {
            if s.is_degenerate() {
                continue;
            }
            match descend_o_plus(&s) {
                Ok(d) => {
                    let up = omega(&d, GroupKind::Oplus);
                    if d.rank() != n - 1 || !up.contains(&s) || up.contains(&s.transpose()) {
                        pass = false;
                        detail = format!("descent of {s} gave {d}");
                    }
                }
                Err(e) => {
                    pass = false;
                    detail = format!("descent of {s} failed: {e}");
                }
            }
        }
        report.check_with(format!("descent rank {n}"), pass, detail);
    }
    report
}

/// First occurrences of the distinguished symbols along the symplectic
/// tower, and the ranks of the cuspidal constructors.
pub fn theta_first() -> Report {
    let mut report = Report::default();
    let one_zero: Symbol = "1;0".parse().unwrap();
    report.check("first occurrence (1;0) at 0", first_occurrence(&one_zero, 1) == 0);
    report.check(
        "first occurrence (0;1) at 1",
        first_occurrence(&one_zero.transpose(), 1) == 1,
    );
    for k in 1..=3u32 {
        let eps = if k % 2 == 0 { 1 } else { -1 };
        report.check(
            format!("first occurrence of the k={k} cuspidal (copy I) at k(k-1)"),
            first_occurrence(&lambda_o_i(k), eps) == k * (k - 1),
        );
        report.check(
            format!("first occurrence of the k={k} cuspidal (copy II) at k(k+1)"),
            first_occurrence(&lambda_o_ii(k), eps) == k * (k + 1),
        );
    }
    for k in 0..=3u32 {
        report.check(
            format!("symplectic cuspidal rank k(k+1) at k={k}"),
            lambda_sp(k).rank() == k * (k + 1),
        );
        report.check(
            format!("odd orthogonal cuspidal rank k(k+1) at k={k}"),
            lambda_so_odd(k).rank() == k * (k + 1),
        );
    }
    report
}

fn symbols_set(items: &[&str]) -> Vec<Symbol> {
    let mut v: Vec<Symbol> = items.iter().map(|s| s.parse().unwrap()).collect();
    v.sort();
    v
}

/// The golden induction sets.
pub fn omega_goldens() -> Report {
    let mut report = Report::default();
    let cases: [(&str, GroupKind, &[&str]); 4] = [
        ("2,0;1", GroupKind::Sp, &["3,0;1", "2,1;1", "2,0;2", "3,1,0;2,1"]),
        ("1;-", GroupKind::Sp, &["2;-", "2,1;0", "2,0;1"]),
        ("1,0;1", GroupKind::Sp, &["2,0;1", "1,0;2", "2,1,0;2,1"]),
        ("-;-", GroupKind::Oplus, &["1;0", "0;1"]),
    ];
    for (from, kind, expected) in cases {
        let got = omega(&from.parse().unwrap(), kind);
        report.check(format!("induction set of ({from})"), got == symbols_set(expected));
    }
    report
}

/// Action laws of the parameter algebra: involutivity, commutation, the
/// Klein-four orbit structure with degenerate collapse, and the
/// spinor/conjugation exchange law.
pub fn parameter_actions() -> Report {
    let mut report = Report::default();
    // exhaust small even orthogonal descriptors with trivial zero part
    for eps in [GroupKind::Oplus, GroupKind::Ominus] {
        for n in 1..=2u32 {
            let group = GroupTag::new(eps, n);
            for n1 in 0..=n {
                let n2 = n - n1;
                for k1 in [GroupKind::Oplus, GroupKind::Ominus] {
                    for k2 in [GroupKind::Oplus, GroupKind::Ominus] {
                        let minus = GroupTag::new(k1, n1);
                        let plus = GroupTag::new(k2, n2);
                        let Ok(d) = CentralizerDescriptor::new(group, vec![], minus, plus) else {
                            continue;
                        };
                        for l1 in enumerate_group_symbols(minus) {
                            for l2 in enumerate_group_symbols(plus) {
                                let t = ParamTriple::new(
                                    vec![],
                                    l1.symbol.clone(),
                                    l2.symbol.clone(),
                                );
                                let c = |t: &ParamTriple| conjugate_action(t, eps).unwrap();
                                let s = |t: &ParamTriple| sgn_action(t, eps).unwrap();
                                let mut pass = c(&c(&t)) == t && s(&s(&t)) == t;
                                pass &= s(&c(&t)) == c(&s(&t));
                                // fiber size: 4 collapsing by degeneracy
                                let mut expected = 4usize;
                                if t.lambda1.is_degenerate() {
                                    expected /= 2;
                                }
                                if t.lambda2.is_degenerate() {
                                    expected /= 2;
                                }
                                pass &= uniform_fiber(&t, eps).len() == expected;
                                // spinor/conjugation exchange
                                let lhs = spinor_action(&c(&t), &d).unwrap();
                                let (sp_t, sp_d) = spinor_action(&t, &d).unwrap();
                                let rhs = s(&c(&sp_t));
                                pass &= lhs.0 == rhs && lhs.1 == sp_d;
                                report.check(
                                    format!("actions on ({}) in series {}", t, d),
                                    pass,
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    // symplectic fibers have size at most two
    let sp2 = GroupTag::new(GroupKind::Sp, 1);
    for l in enumerate_group_symbols(sp2) {
        let t = ParamTriple::new(vec![], Symbol::empty(), l.symbol.clone());
        let fiber = uniform_fiber(&t, GroupKind::Sp);
        report.check(
            format!("symplectic fiber of ({t})"),
            fiber.len() == if t.lambda1.is_degenerate() { 1 } else { 2 },
        );
    }
    report
}

/// With trivial zero and minus coordinates, the coordinate theta relations
/// agree with the plain symbol-level relation.
pub fn coordinate_theta(max_rank: u32) -> Report {
    let mut report = Report::default();
    let trivial_minus = GroupTag::new(GroupKind::Oplus, 0);
    // (Sp, even orthogonal): unipotent on both sides
    for n in 0..=max_rank {
        let d = CentralizerDescriptor::new(
            GroupTag::new(GroupKind::Sp, n),
            vec![],
            trivial_minus,
            GroupTag::new(GroupKind::Sp, n),
        )
        .unwrap();
        for np in 0..=max_rank {
            for eps_kind in [GroupKind::Oplus, GroupKind::Ominus] {
                let dp_plus = GroupTag::new(eps_kind, np);
                let Ok(dp) = CentralizerDescriptor::new(
                    GroupTag::new(eps_kind, np),
                    vec![],
                    trivial_minus,
                    dp_plus,
                ) else {
                    continue;
                };
                let mut pass = true;
                for l2 in enumerate_group_symbols(d.plus) {
                    for l2p in enumerate_group_symbols(dp_plus) {
                        let t = ParamTriple::unipotent(l2.symbol.clone());
                        let tp = ParamTriple::unipotent(l2p.symbol.clone());
                        let got = theta_coordinates_sp_oeven(&t, &d, &tp, &dp, false).unwrap();
                        let want = crate::theta::in_theta_relation(
                            &l2p.symbol,
                            &l2.symbol,
                            eps_kind.epsilon().unwrap(),
                        );
                        if got != want {
                            pass = false;
                        }
                    }
                }
                report.check(format!("coordinate theta sp:{} ↔ {}", 2 * n, dp.group), pass);
            }
        }
    }
    // (Sp, odd orthogonal): trivial zero and minus parts on the left force
    // the middle match; the remaining condition is the relation against the
    // trivial orthogonal symbol.
    for n in 0..=max_rank {
        let d = CentralizerDescriptor::new(
            GroupTag::new(GroupKind::Sp, n),
            vec![],
            trivial_minus,
            GroupTag::new(GroupKind::Sp, n),
        )
        .unwrap();
        for np in n..=max_rank {
            let dp = CentralizerDescriptor::new(
                GroupTag::new(GroupKind::SOodd, np),
                vec![],
                GroupTag::new(GroupKind::Sp, n),
                GroupTag::new(GroupKind::Sp, np - n),
            )
            .unwrap();
            let mut pass = true;
            for l2 in enumerate_group_symbols(d.plus) {
                for l1p in enumerate_group_symbols(dp.minus) {
                    for l2p in enumerate_group_symbols(dp.plus) {
                        let t = ParamTriple::unipotent(l2.symbol.clone());
                        let tp =
                            ParamTriple::new(vec![], l1p.symbol.clone(), l2p.symbol.clone());
                        let got = theta_coordinates_sp_soodd(&t, &d, &tp, &dp, false).unwrap();
                        let want = l2.symbol == l1p.symbol
                            && crate::theta::in_theta_relation(&Symbol::empty(), &l2p.symbol, 1);
                        if got != want {
                            pass = false;
                        }
                    }
                }
            }
            report.check(
                format!("coordinate theta sp:{} ↔ so-odd:{}", 2 * n, 2 * np + 1),
                pass,
            );
        }
    }
    report
}

/// Stability of theta occurrence above the first-occurrence index.
pub fn theta_stability(max_rank: u32) -> Report {
    let mut report = Report::default();
    for kind in [GroupKind::Oplus, GroupKind::Ominus] {
        let eps = kind.epsilon().unwrap();
        for n in 0..=max_rank {
            let tag = GroupTag::new(kind, n);
            let mut pass = true;
            for l in enumerate_group_symbols(tag) {
                let first = first_occurrence(&l.symbol, eps);
                for np in first..first + 3 {
                    if theta_partners(&l.symbol, eps, np).is_empty() {
                        pass = false;
                    }
                }
            }
            report.check(format!("theta stability {tag}"), pass);
        }
    }
    report
}

/// Orientation-choice invariance of the reconstructed projection.
pub fn projection_choice_invariance(max_rank: u32) -> Report {
    let mut report = Report::default();
    for kind in [GroupKind::Oplus, GroupKind::Ominus, GroupKind::SOplus, GroupKind::SOminus] {
        for n in 0..=max_rank {
            let tag = GroupTag::new(kind, n);
            let mut pass = true;
            for l in enumerate_group_symbols(tag) {
                let a = expand_in_model_basis(&uniform_projection(
                    &l.symbol,
                    tag,
                    OrientationPolicy::Lex,
                ));
                let b = expand_in_model_basis(&uniform_projection(
                    &l.symbol,
                    tag,
                    OrientationPolicy::TopHeavy,
                ));
                if a != b {
                    pass = false;
                }
            }
            report.check(format!("projection choice invariance {tag}"), pass);
        }
    }
    report
}

/// Sizes of sharp index sets are consistent across orientation policies.
pub fn sharp_set_sizes(max_rank: u32) -> Report {
    let mut report = Report::default();
    for kind in ALL_KINDS {
        for n in 0..=max_rank {
            let tag = GroupTag::new(kind, n);
            let a = sharp_index_set(tag, OrientationPolicy::Lex).len();
            let b = sharp_index_set(tag, OrientationPolicy::TopHeavy).len();
            report.check(format!("sharp set size stable {tag}"), a == b);
        }
    }
    report
}

/// Partition enumeration counts against an independent recurrence.
pub fn partition_counts(max_n: u32) -> Report {
    let mut report = Report::default();
    // p(n) by Euler's pentagonal recurrence, independent of the enumerator
    let n = max_n as usize;
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g1 > m && g2 > m {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            if g1 <= m {
                total += sign * p[m - g1];
            }
            if g2 <= m {
                total += sign * p[m - g2];
            }
            k += 1;
        }
        p[m] = total;
    }
    for m in 0..=max_n {
        report.check(
            format!("partition count n={m}"),
            Partition::enumerate(m).len() as i64 == p[m as usize],
        );
    }
    report
}
