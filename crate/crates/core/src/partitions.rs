//! Partitions, bipartitions, box additions and the interleaving relation.

use std::fmt;
use std::str::FromStr;

use crate::Error;

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty sequence is the unique partition of `0`. Zero parts are
/// stripped on construction; zero-padding is a display/comparison concern
/// only.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts, dropping zeros. Fails if the nonzero
    /// parts are not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, Error> {
        let mut parts: Vec<u32> = parts.into();
        parts.retain(|&p| p > 0);
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Unchecked constructor for internally generated, already-sorted parts.
    fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-indexed), zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True iff the Young diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Conjugate (transposed) Young diagram.
    pub fn conjugate(&self) -> Partition {
        let rows = self.part(0) as usize;
        let mut parts = Vec::with_capacity(rows);
        for c in 0..rows {
            parts.push(self.parts.iter().filter(|&&p| p as usize > c).count() as u32);
        }
        Partition::from_sorted(parts)
    }

    /// Multiplicity vector: `m[i]` = number of parts equal to `i+1`.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.part(0) as usize];
        for &p in &self.parts {
            m[p as usize - 1] += 1;
        }
        m
    }

    /// All partitions of `n` in lexicographically descending order.
    pub fn enumerate(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        gen_rec(n, n, &mut stack, &mut out);
        out
    }

    /// Partitions of `|self| + 1` obtained by adding a single box.
    pub fn add_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let mut parts: Vec<u32> = self.parts.clone();
            if i == self.len() {
                parts.push(1);
            } else {
                parts[i] += 1;
            }
            if parts.windows(2).all(|w| w[0] >= w[1]) {
                out.push(Partition::from_sorted(parts));
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }

    /// Partitions of `|self| + 2` obtained by adding two boxes in one row or
    /// in one column.
    pub fn add_two_boxes_row_or_column(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        // Two boxes in the same row.
        for i in 0..=self.len() {
            let mut parts: Vec<u32> = self.parts.clone();
            if i == self.len() {
                parts.push(2);
            } else {
                parts[i] += 2;
            }
            if parts.windows(2).all(|w| w[0] >= w[1]) {
                out.push(Partition::from_sorted(parts));
            }
        }
        // Two boxes in the same column = two boxes in one row of the conjugate.
        for p in self.conjugate().add_two_boxes_same_row_only() {
            out.push(p.conjugate());
        }
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }

    fn add_two_boxes_same_row_only(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let mut parts: Vec<u32> = self.parts.clone();
            if i == self.len() {
                parts.push(2);
            } else {
                parts[i] += 2;
            }
            if parts.windows(2).all(|w| w[0] >= w[1]) {
                out.push(Partition::from_sorted(parts));
            }
        }
        out
    }
}

fn gen_rec(remaining: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(stack.clone()));
        return;
    }
    let top = remaining.min(max);
    for p in (1..=top).rev() {
        stack.push(p);
        gen_rec(remaining - p, p, stack, out);
        stack.pop();
    }
}

/// True iff, padding both with zeros, `mu_i >= lambda_i >= mu_{i+1}` for all i.
pub fn interleaves(lambda: &Partition, mu: &Partition) -> bool {
    let len = lambda.len().max(mu.len()) + 1;
    (0..len).all(|i| mu.part(i) >= lambda.part(i) && lambda.part(i) >= mu.part(i + 1))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|_| Error::Parse(format!("bad partition {s:?}")))?;
        Partition::new(parts)
    }
}

/// An ordered pair of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPartition {
    pub top: Partition,
    pub bottom: Partition,
}

impl BiPartition {
    pub fn new(top: Partition, bottom: Partition) -> Self {
        BiPartition { top, bottom }
    }

    pub fn size(&self) -> u32 {
        self.top.size() + self.bottom.size()
    }

    pub fn transpose(&self) -> BiPartition {
        BiPartition::new(self.bottom.clone(), self.top.clone())
    }

    pub fn is_degenerate(&self) -> bool {
        self.top == self.bottom
    }

    /// All bipartitions of `n`, ordered by `|top|` descending, then each row
    /// lexicographically descending. This is the canonical row order used by
    /// the character-table printer.
    pub fn enumerate(n: u32) -> Vec<BiPartition> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            for top in Partition::enumerate(k) {
                for bottom in Partition::enumerate(n - k) {
                    out.push(BiPartition::new(top.clone(), bottom));
                }
            }
        }
        out
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.top, self.bottom)
    }
}

impl fmt::Debug for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for BiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (a, b) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("bad bipartition {s:?}")))?;
        Ok(BiPartition::new(a.parse()?, b.parse()?))
    }
}

/// Union of two partitions as multisets of parts.
pub fn union(a: &Partition, b: &Partition) -> Partition {
    let mut parts: Vec<u32> = a.parts().iter().chain(b.parts()).copied().collect();
    parts.sort_unstable_by(|x, y| y.cmp(x));
    Partition::from_sorted(parts)
}
