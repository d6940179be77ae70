//! Symbols: ordered pairs of strictly decreasing sets of non-negative
//! integers, their rank/defect invariants, similarity reduction, the
//! staircase bijection to bipartitions, and the symbol sets attached to the
//! classical group families.

use std::fmt;
use std::str::FromStr;

use crate::partitions::{BiPartition, Partition};
use crate::Error;

/// A symbol, always stored in reduced form (no `0` shared by both rows).
///
/// Rows are strictly decreasing sequences of non-negative integers. Two
/// symbols related by the shift `(A;B) ~ (A+1 ∪ {0}; B+1 ∪ {0})` are
/// similar; each similarity class contains a unique reduced symbol, which is
/// the stored representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
}

fn strictly_decreasing(row: &[u32]) -> bool {
    row.windows(2).all(|w| w[0] > w[1])
}

/// Rank of a raw (possibly non-reduced) pair of rows.
pub fn rows_rank(top: &[u32], bottom: &[u32]) -> u32 {
    let sum: u32 = top.iter().chain(bottom).sum();
    let m = (top.len() + bottom.len()) as u32;
    let corr = if m == 0 { 0 } else { (m - 1) * (m - 1) / 4 };
    sum - corr
}

/// Defect of a raw pair of rows.
pub fn rows_defect(top: &[u32], bottom: &[u32]) -> i32 {
    top.len() as i32 - bottom.len() as i32
}

impl Symbol {
    /// Builds a symbol from rows and reduces it. Rows must be strictly
    /// decreasing.
    pub fn new(top: impl Into<Vec<u32>>, bottom: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let top = top.into();
        let bottom = bottom.into();
        if !strictly_decreasing(&top) || !strictly_decreasing(&bottom) {
            return Err(Error::InvalidSymbol(format!("{top:?};{bottom:?}")));
        }
        let mut s = Symbol { top, bottom };
        s.reduce_in_place();
        Ok(s)
    }

    pub fn empty() -> Self {
        Symbol { top: Vec::new(), bottom: Vec::new() }
    }

    /// Constructs from entry sets known to be valid (sorted descending).
    pub(crate) fn from_rows_unchecked(mut top: Vec<u32>, mut bottom: Vec<u32>) -> Self {
        top.sort_unstable_by(|a, b| b.cmp(a));
        bottom.sort_unstable_by(|a, b| b.cmp(a));
        debug_assert!(strictly_decreasing(&top) && strictly_decreasing(&bottom));
        let mut s = Symbol { top, bottom };
        s.reduce_in_place();
        s
    }

    fn reduce_in_place(&mut self) {
        while self.top.last() == Some(&0) && self.bottom.last() == Some(&0) {
            self.top.pop();
            self.bottom.pop();
            for a in &mut self.top {
                *a -= 1;
            }
            for b in &mut self.bottom {
                *b -= 1;
            }
        }
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn rank(&self) -> u32 {
        rows_rank(&self.top, &self.bottom)
    }

    pub fn defect(&self) -> i32 {
        rows_defect(&self.top, &self.bottom)
    }

    pub fn transpose(&self) -> Symbol {
        Symbol { top: self.bottom.clone(), bottom: self.top.clone() }
    }

    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }

    /// One application of the shift generating similarity; the result is a
    /// non-reduced raw pair, returned as rows for invariance tests.
    pub fn shifted_rows(&self) -> (Vec<u32>, Vec<u32>) {
        let mut top: Vec<u32> = self.top.iter().map(|a| a + 1).collect();
        let mut bottom: Vec<u32> = self.bottom.iter().map(|b| b + 1).collect();
        top.push(0);
        bottom.push(0);
        (top, bottom)
    }

    /// True iff the two symbols are similar, i.e. have equal reduced forms.
    pub fn similar(&self, other: &Symbol) -> bool {
        self == other
    }

    /// Cuspidal means the rank bound `rk >= floor((def/2)^2)` is an equality.
    pub fn is_cuspidal(&self) -> bool {
        let d = self.defect().unsigned_abs();
        self.rank() == (d / 2) * (d / 2)
    }

    /// Staircase subtraction: the bipartition invariant of the similarity
    /// class.
    pub fn upsilon(&self) -> BiPartition {
        let strip = |row: &[u32]| -> Partition {
            let m = row.len() as u32;
            let parts: Vec<u32> = row
                .iter()
                .enumerate()
                .map(|(i, &a)| a - (m - 1 - i as u32))
                .collect();
            Partition::new(parts).expect("staircase subtraction yields a partition")
        };
        BiPartition::new(strip(&self.top), strip(&self.bottom))
    }

    /// The unique reduced symbol with the given bipartition invariant and
    /// defect. Row lengths are chosen minimal, then staircases added.
    pub fn upsilon_inverse(bp: &BiPartition, defect: i32) -> Symbol {
        let lt = bp.top.len() as i32;
        let lb = bp.bottom.len() as i32;
        let m_top = lt.max(lb + defect).max(defect.max(0));
        let m_bottom = m_top - defect;
        debug_assert!(m_top >= lt && m_bottom >= lb && m_bottom >= 0);
        let fill = |p: &Partition, m: i32| -> Vec<u32> {
            (0..m as usize)
                .map(|i| p.part(i) + (m as u32 - 1 - i as u32))
                .collect()
        };
        Symbol {
            top: fill(&bp.top, m_top),
            bottom: fill(&bp.bottom, m_bottom),
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| -> String {
            if r.is_empty() {
                "-".to_string()
            } else {
                r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }
        };
        write!(f, "{};{}", row(&self.top), row(&self.bottom))
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (a, b) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("bad symbol {s:?}")))?;
        let parse_row = |r: &str| -> Result<Vec<u32>, Error> {
            let r = r.trim();
            if r.is_empty() || r == "-" {
                return Ok(Vec::new());
            }
            r.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad symbol row {r:?}")))
                })
                .collect()
        };
        Symbol::new(parse_row(a)?, parse_row(b)?)
    }
}

/// The classical group families whose unipotent characters are indexed by
/// symbols.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GroupKind {
    /// Sp_{2n}
    Sp,
    /// SO_{2n+1}
    SOodd,
    /// O^+_{2n}
    Oplus,
    /// O^-_{2n}
    Ominus,
    /// SO^+_{2n}
    SOplus,
    /// SO^-_{2n}
    SOminus,
}

impl GroupKind {
    /// Defect residue mod 4 selecting the symbol set.
    pub fn defect_residue(self) -> i32 {
        match self {
            GroupKind::Oplus | GroupKind::SOplus => 0,
            GroupKind::Sp => 1,
            GroupKind::Ominus | GroupKind::SOminus => 2,
            GroupKind::SOodd => 3,
        }
    }

    /// Defect of the special symbols anchoring the families of this kind.
    pub fn special_defect(self) -> i32 {
        match self {
            GroupKind::Sp | GroupKind::SOodd => 1,
            _ => 0,
        }
    }

    pub fn is_even_orthogonal(self) -> bool {
        matches!(
            self,
            GroupKind::Oplus | GroupKind::Ominus | GroupKind::SOplus | GroupKind::SOminus
        )
    }

    pub fn is_special_orthogonal_even(self) -> bool {
        matches!(self, GroupKind::SOplus | GroupKind::SOminus)
    }

    /// The sign of an even (special) orthogonal kind.
    pub fn epsilon(self) -> Option<i32> {
        match self {
            GroupKind::Oplus | GroupKind::SOplus => Some(1),
            GroupKind::Ominus | GroupKind::SOminus => Some(-1),
            _ => None,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupKind::Sp => "sp",
            GroupKind::SOodd => "so-odd",
            GroupKind::Oplus => "o+",
            GroupKind::Ominus => "o-",
            GroupKind::SOplus => "so+",
            GroupKind::SOminus => "so-",
        };
        write!(f, "{s}")
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sp" => Ok(GroupKind::Sp),
            "so-odd" | "soodd" => Ok(GroupKind::SOodd),
            "o+" | "oplus" => Ok(GroupKind::Oplus),
            "o-" | "ominus" => Ok(GroupKind::Ominus),
            "so+" | "soplus" => Ok(GroupKind::SOplus),
            "so-" | "sominus" => Ok(GroupKind::SOminus),
            other => Err(Error::Parse(format!("unknown group kind {other:?}"))),
        }
    }
}

/// A classical group of a given kind and rank subscript `n` (so `Sp_{2n}`,
/// `SO_{2n+1}`, `O^ε_{2n}`, `SO^ε_{2n}`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GroupTag {
    pub kind: GroupKind,
    pub n: u32,
}

impl GroupTag {
    pub fn new(kind: GroupKind, n: u32) -> Self {
        GroupTag { kind, n }
    }

    /// The group subscript as it appears in the group's name (`4` in `Sp_4`).
    pub fn subscript(&self) -> u32 {
        match self.kind {
            GroupKind::SOodd => 2 * self.n + 1,
            _ => 2 * self.n,
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.subscript())
    }
}

impl FromStr for GroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (k, sub) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad group tag {s:?}")))?;
        let kind: GroupKind = k.parse()?;
        let sub: u32 = sub
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad group subscript {sub:?}")))?;
        let n = match kind {
            GroupKind::SOodd => {
                if sub % 2 == 0 {
                    return Err(Error::Parse(format!("odd orthogonal subscript must be odd: {sub}")));
                }
                (sub - 1) / 2
            }
            _ => {
                if sub % 2 != 0 {
                    return Err(Error::Parse(format!("even group subscript must be even: {sub}")));
                }
                sub / 2
            }
        };
        Ok(GroupTag::new(kind, n))
    }
}

/// Degenerate-symbol copy labels used by the `SO^ε` symbol sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum CopyLabel {
    I,
    II,
}

impl fmt::Display for CopyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CopyLabel::I => write!(f, "I"),
            CopyLabel::II => write!(f, "II"),
        }
    }
}

/// A symbol with an optional degenerate-copy label. Labels only occur for
/// `SO^ε` kinds, where a degenerate symbol appears twice; the assignment of
/// `I` vs `II` to the two copies is an arbitrary bookkeeping choice.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LabeledSymbol {
    pub symbol: Symbol,
    pub label: Option<CopyLabel>,
}

impl LabeledSymbol {
    pub fn plain(symbol: Symbol) -> Self {
        LabeledSymbol { symbol, label: None }
    }
}

impl fmt::Display for LabeledSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            None => write!(f, "{}", self.symbol),
            Some(l) => write!(f, "{}^{}", self.symbol, l),
        }
    }
}

/// All reduced symbols of the given rank and defect. Empty when the rank
/// bound `rk >= floor((def/2)^2)` fails.
pub fn enumerate_symbols(rank: u32, defect: i32) -> Vec<Symbol> {
    let d = defect.unsigned_abs();
    let base = (d / 2) * (d / 2);
    if base > rank {
        return Vec::new();
    }
    BiPartition::enumerate(rank - base)
        .iter()
        .map(|bp| Symbol::upsilon_inverse(bp, defect))
        .collect()
}

/// Defects in the residue class of `kind` admissible at the given rank,
/// listed as 0 or ±|d| ordered by absolute value.
pub fn admissible_defects(kind: GroupKind, rank: u32) -> Vec<i32> {
    let residue = kind.defect_residue();
    let mut out = Vec::new();
    let mut d: i32 = 0;
    loop {
        let bound = (d.unsigned_abs() / 2) * (d.unsigned_abs() / 2);
        if bound > rank {
            break;
        }
        if d.rem_euclid(4) == residue {
            out.push(d);
        }
        if d > 0 && (-d).rem_euclid(4) == residue {
            let bound_neg = (d.unsigned_abs() / 2) * (d.unsigned_abs() / 2);
            if bound_neg <= rank {
                out.push(-d);
            }
        }
        d += 1;
    }
    out
}

/// The symbol set of a classical group. For the `SO^ε` kinds, non-degenerate
/// symbols are identified with their transposes (one canonical
/// representative is listed) and each degenerate symbol occurs twice with
/// labels I and II.
pub fn enumerate_group_symbols(tag: GroupTag) -> Vec<LabeledSymbol> {
    let mut all: Vec<Symbol> = Vec::new();
    for d in admissible_defects(tag.kind, tag.n) {
        all.extend(enumerate_symbols(tag.n, d));
    }
    if !tag.kind.is_special_orthogonal_even() {
        return all.into_iter().map(LabeledSymbol::plain).collect();
    }
    let mut out = Vec::new();
    for s in all {
        if s.is_degenerate() {
            out.push(LabeledSymbol { symbol: s.clone(), label: Some(CopyLabel::I) });
            out.push(LabeledSymbol { symbol: s, label: Some(CopyLabel::II) });
        } else if s <= s.transpose() {
            // keep one representative per {Λ, Λ^t} orbit
            out.push(LabeledSymbol::plain(s));
        }
    }
    out
}

/// Cuspidal symbol of `Sp_{2k(k+1)}`.
pub fn lambda_sp(k: u32) -> Symbol {
    let staircase: Vec<u32> = (0..=2 * k).rev().collect();
    if k % 2 == 0 {
        Symbol::from_rows_unchecked(staircase, Vec::new())
    } else {
        Symbol::from_rows_unchecked(Vec::new(), staircase)
    }
}

/// First cuspidal symbol of `O^{ε_k}_{2k^2}`, `ε_k = (-1)^k`.
pub fn lambda_o_i(k: u32) -> Symbol {
    if k == 0 {
        return Symbol::empty();
    }
    let staircase: Vec<u32> = (0..=2 * k - 1).rev().collect();
    if k % 2 == 0 {
        Symbol::from_rows_unchecked(staircase, Vec::new())
    } else {
        Symbol::from_rows_unchecked(Vec::new(), staircase)
    }
}

/// Second cuspidal symbol of `O^{ε_k}_{2k^2}`: the transpose of the first.
pub fn lambda_o_ii(k: u32) -> Symbol {
    lambda_o_i(k).transpose()
}

/// Cuspidal symbol of `SO_{2k(k+1)+1}`.
pub fn lambda_so_odd(k: u32) -> Symbol {
    let staircase: Vec<u32> = (0..=2 * k).rev().collect();
    if k % 2 == 0 {
        Symbol::from_rows_unchecked(Vec::new(), staircase)
    } else {
        Symbol::from_rows_unchecked(staircase, Vec::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::BiPartition;
    use std::collections::BTreeSet;

    pub(crate) fn sym(s: &str) -> Symbol {
        s.parse().unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Symbol> {
        items.iter().map(|s| sym(s)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(sym("2,0;1").rank(), 2);
        assert_eq!(Symbol::empty().rank(), 0);
        assert_eq!(sym("1;0").rank(), 1);
    }

    #[test]
    fn defect_examples() {
        assert_eq!(sym("2,0;1").defect(), 1);
        assert_eq!(sym("-;2,1,0").defect(), -3);
        assert_eq!(sym("3,1;2,0").defect(), 0);
    }

    #[test]
    fn reduction() {
        assert_eq!(sym("2,1;1"), Symbol::new(vec![2, 1], vec![1]).unwrap());
        // (2,1,0;1,0) -> (1,0;0) -> (0;-)
        assert_eq!(Symbol::new(vec![2, 1, 0], vec![1, 0]).unwrap(), sym("0;-"));
        // shift((2,0;1)) = (3,1,0;2,0) reduces back
        let (t, b) = sym("2,0;1").shifted_rows();
        assert_eq!((t.clone(), b.clone()), (vec![3, 1, 0], vec![2, 0]));
        assert_eq!(Symbol::new(t, b).unwrap(), sym("2,0;1"));
    }

    #[test]
    fn similarity() {
        assert!(sym("2,0;1").similar(&Symbol::new(vec![3, 1, 0], vec![2, 0]).unwrap()));
        assert!(!sym("2,0;1").similar(&sym("2,1;0")));
        let s = sym("2,1;0");
        assert!(s.similar(&s));
    }

    #[test]
    fn rank_defect_invariant_under_shift() {
        for s in enumerate_symbols(4, 1).iter().chain(enumerate_symbols(3, -2).iter()) {
            let (mut t, mut b) = (s.top().to_vec(), s.bottom().to_vec());
            for _ in 0..6 {
                let shifted = Symbol { top: t.clone(), bottom: b.clone() }.shifted_rows();
                t = shifted.0;
                b = shifted.1;
                assert_eq!(rows_rank(&t, &b), s.rank());
                assert_eq!(rows_defect(&t, &b), s.defect());
            }
        }
    }

    #[test]
    fn upsilon_examples() {
        assert_eq!(sym("2,0;1").upsilon().to_string(), "1;1");
        assert_eq!(sym("3,2,1,0;-").upsilon().to_string(), "-;-");
        assert_eq!(sym("1;0").upsilon().to_string(), "1;-");
    }

    #[test]
    fn upsilon_inverse_examples() {
        let bp: BiPartition = "1;1".parse().unwrap();
        assert_eq!(Symbol::upsilon_inverse(&bp, 1), sym("2,0;1"));
        for k in 1..=3u32 {
            let bp: BiPartition = "-;-".parse().unwrap();
            let got = Symbol::upsilon_inverse(&bp, 2 * k as i32);
            let staircase: Vec<u32> = (0..=2 * k - 1).rev().collect();
            assert_eq!(got, Symbol::new(staircase, vec![]).unwrap());
        }
    }

    #[test]
    fn upsilon_round_trip() {
        for n in 0..=6 {
            for d in -5..=5 {
                for s in enumerate_symbols(n, d) {
                    assert_eq!(Symbol::upsilon_inverse(&s.upsilon(), s.defect()), s);
                    assert_eq!(s.rank(), n);
                    assert_eq!(s.defect(), d);
                }
            }
        }
    }

    #[test]
    fn upsilon_bijective_counts() {
        for n in 0..=6u32 {
            for d in -5..=5i32 {
                let base = (d.unsigned_abs() / 2) * (d.unsigned_abs() / 2);
                let expected = if base > n {
                    0
                } else {
                    BiPartition::enumerate(n - base).len()
                };
                assert_eq!(enumerate_symbols(n, d).len(), expected);
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let got: BTreeSet<_> = enumerate_symbols(2, 1).into_iter().collect();
        assert_eq!(got, set(&["2;-", "2,1,0;2,1", "2,1;0", "2,0;1", "1,0;2"]));
        let got: BTreeSet<_> = enumerate_symbols(1, 0).into_iter().collect();
        assert_eq!(got, set(&["1;0", "0;1"]));
        assert!(enumerate_symbols(0, 3).is_empty());
    }

    #[test]
    fn group_sets_match_worked_examples() {
        let sp4: BTreeSet<_> = enumerate_group_symbols(GroupTag::new(GroupKind::Sp, 2))
            .into_iter()
            .map(|l| l.symbol)
            .collect();
        assert_eq!(
            sp4,
            set(&["2;-", "2,1,0;2,1", "2,1;0", "2,0;1", "1,0;2", "-;2,1,0"])
        );
        let om4: BTreeSet<_> = enumerate_group_symbols(GroupTag::new(GroupKind::Ominus, 2))
            .into_iter()
            .map(|l| l.symbol)
            .collect();
        assert_eq!(om4, set(&["-;2,0", "2,0;-", "1;2,1,0", "2,1,0;1"]));
        let op4: BTreeSet<_> = enumerate_group_symbols(GroupTag::new(GroupKind::Oplus, 2))
            .into_iter()
            .map(|l| l.symbol)
            .collect();
        assert_eq!(op4, set(&["2;0", "0;2", "2,1;1,0", "1,0;2,1", "1;1"]));
    }

    #[test]
    fn transpose_membership_and_invariants() {
        for n in 0..=4u32 {
            for kind in [GroupKind::Oplus, GroupKind::Ominus] {
                let tag = GroupTag::new(kind, n);
                let members: BTreeSet<Symbol> = enumerate_group_symbols(tag)
                    .into_iter()
                    .map(|l| l.symbol)
                    .collect();
                for s in &members {
                    assert!(members.contains(&s.transpose()));
                    assert_eq!(s.transpose().rank(), s.rank());
                    assert_eq!(s.transpose().defect(), -s.defect());
                }
                if kind == GroupKind::Ominus {
                    assert!(members.iter().all(|s| !s.is_degenerate()));
                }
            }
        }
    }

    #[test]
    fn degenerate_symbols_have_even_rank_and_zero_defect() {
        for n in 0..=5 {
            for d in -4..=4 {
                for s in enumerate_symbols(n, d) {
                    if s.is_degenerate() {
                        assert_eq!(s.defect(), 0);
                        assert_eq!(s.rank() % 2, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn so_even_doubles_degenerates() {
        let so4 = enumerate_group_symbols(GroupTag::new(GroupKind::SOplus, 2));
        // orbits of S_{O^+_4}: {(2;0),(0;2)}, {(2,1;1,0),(1,0;2,1)}, {(1;1)} (degenerate)
        assert_eq!(so4.len(), 4);
        let degenerates: Vec<_> = so4.iter().filter(|l| l.label.is_some()).collect();
        assert_eq!(degenerates.len(), 2);
        assert!(degenerates.iter().all(|l| l.symbol == sym("1;1")));
    }

    #[test]
    fn cuspidal_examples() {
        assert!(sym("2,1,0;-").is_cuspidal());
        assert!(!sym("2,0;1").is_cuspidal());
        assert!(sym("0;-").is_cuspidal());
    }

    #[test]
    fn cuspidal_constructors() {
        assert_eq!(lambda_sp(1), sym("-;2,1,0"));
        assert_eq!(lambda_o_i(1), sym("-;1,0"));
        assert_eq!(lambda_o_ii(1), sym("1,0;-"));
        assert_eq!(lambda_so_odd(1), sym("2,1,0;-"));
        for k in 0..=3u32 {
            assert_eq!(lambda_sp(k).rank(), k * (k + 1));
            assert_eq!(lambda_o_i(k).rank(), k * k);
            assert_eq!(lambda_o_ii(k).rank(), k * k);
            assert_eq!(lambda_so_odd(k).rank(), k * (k + 1));
            assert_eq!(lambda_sp(k).defect().rem_euclid(4), 1);
            assert_eq!(lambda_so_odd(k).defect().rem_euclid(4), 3);
            assert!(lambda_sp(k).is_cuspidal());
            assert!(lambda_o_i(k).is_cuspidal());
            assert!(lambda_so_odd(k).is_cuspidal());
        }
    }

    #[test]
    fn group_tag_round_trip() {
        for s in ["sp:4", "so-odd:5", "o+:4", "o-:2", "so+:8", "so-:6"] {
            let t: GroupTag = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert!("sp:3".parse::<GroupTag>().is_err());
        assert!("so-odd:4".parse::<GroupTag>().is_err());
    }

    #[test]
    fn symbol_parse_display_round_trip() {
        for s in ["2,0;1", "-;2,1,0", "-;-", "3,1;2,0"] {
            assert_eq!(sym(s).to_string(), s);
        }
        assert!("1,2;0".parse::<Symbol>().is_err()); // not strictly decreasing
    }
}
