//! The hyperoctahedral group `W_n` (Coxeter type B): signed permutations,
//! conjugacy classes indexed by pairs of partitions, the full character
//! table built from symmetric-group characters and class-fusion induction,
//! and exact inner products over `W_n`, `W_n^+` and `W_n^-`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::partitions::{union, BiPartition, Partition};
use crate::scalar::Sqrt2Rational;
use crate::Error;

/// Hard cap on character-table rank; tables are dense in `|P_2(n)|^2`.
pub const MAX_TABLE_RANK: u32 = 12;

/// Default rank bound used by command-line tools.
pub const DEFAULT_MAX_RANK: u32 = 8;

/// A conjugacy class of `W_n`: cycle types of the positive and negative
/// cycles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedClass {
    pub pos: Partition,
    pub neg: Partition,
}

impl SignedClass {
    pub fn new(pos: Partition, neg: Partition) -> Self {
        SignedClass { pos, neg }
    }

    pub fn n(&self) -> u32 {
        self.pos.size() + self.neg.size()
    }

    /// Centralizer order `z_pos 2^{l(pos)} z_neg 2^{l(neg)}`.
    pub fn centralizer_order(&self) -> u64 {
        fn z(p: &Partition) -> u64 {
            let mut v = 1u64;
            for (i, &m) in p.multiplicities().iter().enumerate() {
                let part = (i + 1) as u64;
                for _ in 0..m {
                    v *= part;
                }
                v *= factorial(m as u64);
            }
            v
        }
        z(&self.pos) * (1u64 << self.pos.len()) * z(&self.neg) * (1u64 << self.neg.len())
    }

    pub fn size(&self) -> u64 {
        group_order(self.n()) / self.centralizer_order()
    }

    /// Value of the linear character `ε_n` on this class.
    pub fn epsilon(&self) -> i64 {
        if self.neg.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The class lies in the index-two subgroup `W_n^+` iff `ε_n = 1`.
    pub fn in_plus(&self) -> bool {
        self.epsilon() == 1
    }
}

impl fmt::Display for SignedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.pos, self.neg)
    }
}

impl fmt::Debug for SignedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// `|W_n| = 2^n n!`.
pub fn group_order(n: u32) -> u64 {
    (1u64 << n) * factorial(n as u64)
}

/// All conjugacy classes of `W_n` in the canonical order: underlying cycle
/// types `pos ∪ neg` lexicographically ascending, splits of each cycle type
/// by `|pos|` descending then `pos` lexicographically descending.
pub fn enumerate_classes(n: u32) -> Vec<SignedClass> {
    let mut shapes = Partition::enumerate(n);
    shapes.reverse(); // ascending
    let mut out = Vec::new();
    for shape in shapes {
        let mut splits = sub_multisets(&shape);
        splits.sort_by(|a, b| {
            b.size()
                .cmp(&a.size())
                .then_with(|| b.parts().cmp(a.parts()))
        });
        for pos in splits {
            let neg = multiset_difference(&shape, &pos);
            out.push(SignedClass::new(pos, neg));
        }
    }
    out
}

/// All distinct sub-multisets of the parts of `p`.
fn sub_multisets(p: &Partition) -> Vec<Partition> {
    let mult = p.multiplicities();
    let mut acc: Vec<Vec<u32>> = vec![Vec::new()];
    for (i, &m) in mult.iter().enumerate() {
        let part = (i + 1) as u32;
        let mut next = Vec::new();
        for chosen in &acc {
            for k in 0..=m {
                let mut v = chosen.clone();
                for _ in 0..k {
                    v.push(part);
                }
                next.push(v);
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).expect("sub-multiset is a partition")
        })
        .collect()
}

fn multiset_difference(whole: &Partition, part: &Partition) -> Partition {
    let mut rest: Vec<u32> = whole.parts().to_vec();
    for &q in part.parts() {
        let idx = rest.iter().position(|&r| r == q).expect("part not contained");
        rest.remove(idx);
    }
    Partition::new(rest).expect("difference is a partition")
}

/// A signed permutation: entry `i` (1-indexed) maps to `targets[i-1]`,
/// where a negative target means the image carries a sign change. This is a
/// permutation of `{1..n, 1*..n*}` commuting with the star involution.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    targets: Vec<i32>,
}

impl SignedPerm {
    pub fn new(targets: Vec<i32>) -> Result<Self, Error> {
        let n = targets.len();
        let mut seen = vec![false; n];
        for &t in &targets {
            let a = t.unsigned_abs() as usize;
            if t == 0 || a == 0 || a > n || seen[a - 1] {
                return Err(Error::InvalidSignedPermutation(format!("{targets:?}")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm { targets })
    }

    pub fn identity(n: u32) -> Self {
        SignedPerm { targets: (1..=n as i32).collect() }
    }

    /// Coxeter generator `s_i = (i, i+1)(i*, (i+1)*)`, `1 <= i <= n-1`.
    pub fn s(n: u32, i: u32) -> Self {
        assert!(1 <= i && i < n);
        let mut t: Vec<i32> = (1..=n as i32).collect();
        t.swap(i as usize - 1, i as usize);
        SignedPerm { targets: t }
    }

    /// The sign change `σ_n = (n, n*)`.
    pub fn sigma(n: u32) -> Self {
        let mut t: Vec<i32> = (1..=n as i32).collect();
        t[n as usize - 1] = -(n as i32);
        SignedPerm { targets: t }
    }

    pub fn n(&self) -> u32 {
        self.targets.len() as u32
    }

    fn apply(&self, x: i32) -> i32 {
        let t = self.targets[x.unsigned_abs() as usize - 1];
        if x > 0 {
            t
        } else {
            -t
        }
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.n(), other.n());
        let targets = (1..=self.n() as i32).map(|i| self.apply(other.apply(i))).collect();
        SignedPerm { targets }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.n() as usize;
        let mut targets = vec![0i32; n];
        for i in 1..=n as i32 {
            let t = self.targets[i as usize - 1];
            targets[t.unsigned_abs() as usize - 1] = if t > 0 { i } else { -i };
        }
        SignedPerm { targets }
    }

    /// Cycle type split by the sign-change parity of each cycle.
    pub fn class(&self) -> SignedClass {
        let n = self.n() as usize;
        let mut seen = vec![false; n];
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0u32;
            let mut sign = 1i32;
            let mut x = start as i32;
            loop {
                seen[x.unsigned_abs() as usize - 1] = true;
                let t = self.targets[x.unsigned_abs() as usize - 1];
                sign *= t.signum();
                len += 1;
                x = t.abs();
                if x as usize == start {
                    break;
                }
            }
            if sign > 0 {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        SignedClass::new(
            Partition::new(pos).unwrap(),
            Partition::new(neg).unwrap(),
        )
    }

    /// Every element of `W_n`; intended for small-rank oracles only.
    pub fn all(n: u32) -> Vec<SignedPerm> {
        assert!(n <= 5, "explicit enumeration is for small-rank oracles");
        let mut out = vec![SignedPerm::identity(0)];
        for i in 1..=n as i32 {
            let mut next = Vec::new();
            for p in &out {
                for pos in 0..p.targets.len() + 1 {
                    for sign in [1, -1] {
                        let mut t = p.targets.clone();
                        t.insert(pos, sign * i);
                        next.push(SignedPerm { targets: t });
                    }
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.targets)
    }
}

/// The character table of `W_n`: integer values indexed by
/// (bipartition row, signed-class column), both in canonical order.
pub struct CharacterTable {
    pub n: u32,
    pub rows: Vec<BiPartition>,
    pub classes: Vec<SignedClass>,
    pub values: Vec<Vec<i64>>,
    row_index: HashMap<BiPartition, usize>,
    class_index: HashMap<SignedClass, usize>,
}

impl CharacterTable {
    pub fn value(&self, bp: &BiPartition, class: &SignedClass) -> i64 {
        self.values[self.row_index[bp]][self.class_index[class]]
    }

    pub fn row(&self, bp: &BiPartition) -> &[i64] {
        &self.values[self.row_index[bp]]
    }

    pub fn row_index(&self, bp: &BiPartition) -> usize {
        self.row_index[bp]
    }

    pub fn class_index(&self, class: &SignedClass) -> usize {
        self.class_index[class]
    }

    /// The character row as an exact class function.
    pub fn class_function(&self, bp: &BiPartition) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self.row(bp).iter().map(|&v| Sqrt2Rational::from_int(v)).collect(),
        }
    }
}

/// Symmetric-group character values by Murnaghan-Nakayama over beta sets,
/// memoized per (partition, cycle type).
fn sn_character(lambda: &Partition, rho: &Partition, memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    debug_assert_eq!(lambda.size(), rho.size());
    if lambda.size() == 0 {
        return 1;
    }
    let key = (lambda.parts().to_vec(), rho.parts().to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // Beta set: lambda_i + (m - i), strictly decreasing.
    let m = lambda.len();
    let beta: Vec<u32> = (0..m).map(|i| lambda.part(i) + (m - 1 - i) as u32).collect();
    let r = rho.part(0);
    let rest = Partition::new(rho.parts()[1..].to_vec()).unwrap();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let mut nb = beta.clone();
        nb[idx] = b - r;
        // height = number of beta entries strictly between b-r and b
        let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
        nb.sort_unstable_by(|a, c| c.cmp(a));
        // convert back to a partition
        let mm = nb.len();
        let parts: Vec<u32> = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (mm - 1 - i) as u32)
            .collect();
        let sub = Partition::new(parts).unwrap();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * sn_character(&sub, &rest, memo);
    }
    memo.insert(key, total);
    total
}

fn build_table(n: u32) -> CharacterTable {
    let classes = enumerate_classes(n);
    let rows = BiPartition::enumerate(n);
    let mut memo = HashMap::new();

    // Pre-compute classes and centralizer orders of W_k for all k <= n.
    let sub_classes: Vec<Vec<SignedClass>> = (0..=n).map(enumerate_classes).collect();

    let mut values = Vec::with_capacity(rows.len());
    for bp in &rows {
        let k = bp.top.size();
        let l = bp.bottom.size();
        let mut row = Vec::with_capacity(classes.len());
        for class in &classes {
            // Induced-character formula over class fusion from W_k x W_l.
            let mut sum = BigRational::zero();
            for c1 in &sub_classes[k as usize] {
                if !contains_multiset(&class.pos, &c1.pos) || !contains_multiset(&class.neg, &c1.neg)
                {
                    continue;
                }
                let alpha2 = multiset_difference(&class.pos, &c1.pos);
                let beta2 = multiset_difference(&class.neg, &c1.neg);
                if alpha2.size() + beta2.size() != l {
                    continue;
                }
                let c2 = SignedClass::new(alpha2, beta2);
                let chi_top = sn_character(&bp.top, &union(&c1.pos, &c1.neg), &mut memo);
                let chi_bottom = sn_character(&bp.bottom, &union(&c2.pos, &c2.neg), &mut memo);
                let eps = c2.epsilon();
                let term = BigRational::from_integer(BigInt::from(chi_top * eps * chi_bottom))
                    / BigRational::from_integer(BigInt::from(
                        c1.centralizer_order() * c2.centralizer_order(),
                    ));
                sum += term;
            }
            let value = sum * BigRational::from_integer(BigInt::from(class.centralizer_order()));
            assert!(value.is_integer(), "induced character value must be an integer");
            row.push(value.to_integer().to_i64().expect("character value fits in i64"));
        }
        values.push(row);
    }

    let row_index = rows.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
    let class_index = classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    CharacterTable { n, rows, classes, values, row_index, class_index }
}

fn contains_multiset(whole: &Partition, part: &Partition) -> bool {
    let wm = whole.multiplicities();
    let pm = part.multiplicities();
    pm.iter().enumerate().all(|(i, &m)| m <= wm.get(i).copied().unwrap_or(0))
}

/// The memoized character table of `W_n`. First access per rank computes the
/// table under a lock; afterwards the shared immutable table is returned.
pub fn character_table(n: u32) -> Arc<CharacterTable> {
    assert!(n <= MAX_TABLE_RANK, "character table rank {n} exceeds {MAX_TABLE_RANK}");
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("character table cache poisoned");
    guard.entry(n).or_insert_with(|| Arc::new(build_table(n))).clone()
}

/// An exact class function on `W_n`, stored in canonical class order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    pub n: u32,
    pub values: Vec<Sqrt2Rational>,
}

/// Domain of an inner product: all of `W_n` or one of the `ε_n`-cosets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Domain {
    Full,
    Plus,
    Minus,
}

impl Domain {
    fn contains(self, class: &SignedClass) -> bool {
        match self {
            Domain::Full => true,
            Domain::Plus => class.in_plus(),
            Domain::Minus => !class.in_plus(),
        }
    }

    fn order(self, n: u32) -> u64 {
        match self {
            Domain::Full => group_order(n),
            Domain::Plus => {
                if n == 0 {
                    1
                } else {
                    group_order(n) / 2
                }
            }
            Domain::Minus => {
                if n == 0 {
                    0
                } else {
                    group_order(n) / 2
                }
            }
        }
    }
}

/// `(1/|D|) Σ_{w in D} f1(w) f2(w)` with the sum restricted to the domain.
/// An empty domain gives zero.
pub fn inner_product(
    f1: &ClassFunction,
    f2: &ClassFunction,
    domain: Domain,
) -> Result<Sqrt2Rational, Error> {
    if f1.n != f2.n {
        return Err(Error::RankMismatch(f1.n, f2.n));
    }
    let classes = enumerate_classes(f1.n);
    let order = domain.order(f1.n);
    if order == 0 {
        return Ok(Sqrt2Rational::zero());
    }
    let mut sum = Sqrt2Rational::zero();
    for (i, class) in classes.iter().enumerate() {
        if !domain.contains(class) {
            continue;
        }
        let weight = Sqrt2Rational::from_int(class.size() as i64);
        sum += weight * (&f1.values[i] * &f2.values[i]);
    }
    Ok(sum * Sqrt2Rational::from_ratio(1, order as i64))
}

/// True iff the two character rows agree on every class of `W_n^+`.
pub fn restriction_equal_on_plus(n: u32, bp1: &BiPartition, bp2: &BiPartition) -> bool {
    let table = character_table(n);
    table
        .classes
        .iter()
        .filter(|c| c.in_plus())
        .all(|c| table.value(bp1, c) == table.value(bp2, c))
}
