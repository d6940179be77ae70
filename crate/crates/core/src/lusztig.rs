//! Parameter algebra of the modified Lusztig correspondence: centralizer
//! descriptors, parameter triples `(x, Λ1, Λ2)`, the sign/conjugation/spinor
//! actions on parameters, uniform-projection fibers, first-occurrence
//! indices of basic characters, and the coordinate form of the theta
//! relation for the two symplectic dual pairs.
//!
//! Semisimple elements never appear: every statement implemented here
//! depends on them only through the shape of their dual centralizer, so a
//! descriptor records just that shape.

use std::fmt;
use std::str::FromStr;

use crate::partitions::Partition;
use crate::symbols::{enumerate_group_symbols, GroupKind, GroupTag, Symbol};
use crate::theta::in_theta_relation;
use crate::Error;

/// Kind of a factor of the eigenvalue-neither-one-nor-minus-one part.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZeroKind {
    GL,
    U,
}

impl fmt::Display for ZeroKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZeroKind::GL => write!(f, "gl"),
            ZeroKind::U => write!(f, "u"),
        }
    }
}

/// One general-linear or unitary factor: defined over a degree-`field_degree`
/// extension, of size `size` (so it contributes `field_degree * size` to the
/// rank bookkeeping).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ZeroFactor {
    pub kind: ZeroKind,
    pub field_degree: u32,
    pub size: u32,
}

impl fmt::Display for ZeroFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}:{}", self.kind, self.field_degree, self.size)
    }
}

impl FromStr for ZeroFactor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (head, size) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad factor {s:?}")))?;
        let (kind, deg) = if let Some(d) = head.strip_prefix("gl") {
            (ZeroKind::GL, d)
        } else if let Some(d) = head.strip_prefix('u') {
            (ZeroKind::U, d)
        } else {
            return Err(Error::Parse(format!("bad factor kind {head:?}")));
        };
        let field_degree: u32 =
            deg.parse().map_err(|_| Error::Parse(format!("bad field degree {deg:?}")))?;
        let size: u32 =
            size.trim().parse().map_err(|_| Error::Parse(format!("bad factor size {size:?}")))?;
        Ok(ZeroFactor { kind, field_degree, size })
    }
}

/// The shape of the dual centralizer of a semisimple element: a list of
/// general-linear/unitary factors plus the minus and plus classical parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CentralizerDescriptor {
    pub group: GroupTag,
    pub zero: Vec<ZeroFactor>,
    pub minus: GroupTag,
    pub plus: GroupTag,
}

impl CentralizerDescriptor {
    pub fn new(
        group: GroupTag,
        zero: Vec<ZeroFactor>,
        minus: GroupTag,
        plus: GroupTag,
    ) -> Result<Self, Error> {
        let d = CentralizerDescriptor { group, zero, minus, plus };
        d.validate_shape()?;
        Ok(d)
    }

    fn validate_shape(&self) -> Result<(), Error> {
        let fail = |msg: String| Err(Error::InvalidDescriptor(msg));
        for f in &self.zero {
            if f.size == 0 || f.field_degree == 0 {
                return fail(format!("factor {f} has a zero size or field degree"));
            }
        }
        for part in [self.minus, self.plus] {
            if part.n == 0 && part.kind == GroupKind::Ominus {
                return fail("the trivial orthogonal part must be o+:0".into());
            }
        }
        match self.group.kind {
            GroupKind::SOodd => {
                if self.minus.kind != GroupKind::Sp || self.plus.kind != GroupKind::Sp {
                    return fail(format!("{}: both parts must be symplectic", self.group));
                }
            }
            GroupKind::Sp => {
                if !matches!(self.minus.kind, GroupKind::Oplus | GroupKind::Ominus)
                    || self.plus.kind != GroupKind::Sp
                {
                    return fail(format!(
                        "{}: minus part must be even orthogonal, plus part symplectic",
                        self.group
                    ));
                }
            }
            GroupKind::Oplus | GroupKind::Ominus => {
                let (Some(e1), Some(e2)) = (self.minus.kind.epsilon(), self.plus.kind.epsilon())
                else {
                    return fail(format!("{}: both parts must be even orthogonal", self.group));
                };
                if self.minus.kind.is_special_orthogonal_even()
                    || self.plus.kind.is_special_orthogonal_even()
                {
                    return fail("descriptor parts are full orthogonal groups".into());
                }
                if e1 * e2 != self.group.kind.epsilon().unwrap() {
                    return fail(format!("{}: signs of the parts must multiply to ε", self.group));
                }
            }
            _ => return fail(format!("{} admits no descriptor", self.group)),
        }
        let zero_rank: u32 = self.zero.iter().map(|f| f.field_degree * f.size).sum();
        if zero_rank + self.minus.n + self.plus.n != self.group.n {
            return fail(format!(
                "rank bookkeeping fails: {} + {} + {} != {}",
                zero_rank, self.minus.n, self.plus.n, self.group.n
            ));
        }
        Ok(())
    }

    /// Number of irreducible characters in the series this shape indexes:
    /// the product of the unipotent-label counts of all three parts.
    pub fn series_size(&self) -> u64 {
        let mut total: u64 = 1;
        for f in &self.zero {
            total *= Partition::enumerate(f.size).len() as u64;
        }
        total *= enumerate_group_symbols(self.minus).len() as u64;
        total *= enumerate_group_symbols(self.plus).len() as u64;
        total
    }
}

impl fmt::Display for CentralizerDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let zero = if self.zero.is_empty() {
            "-".to_string()
        } else {
            self.zero.iter().map(|z| z.to_string()).collect::<Vec<_>>().join(", ")
        };
        write!(f, "{} | 0: {} | -: {} | +: {}", self.group, zero, self.minus, self.plus)
    }
}

impl FromStr for CentralizerDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut segments = s.split('|').map(str::trim);
        let group: GroupTag = segments
            .next()
            .ok_or_else(|| Error::Parse("empty descriptor".into()))?
            .parse()?;
        let mut zero = Vec::new();
        let mut minus = None;
        let mut plus = None;
        for seg in segments {
            let (prefix, value) = seg
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad descriptor segment {seg:?}")))?;
            let value = value.trim();
            match prefix.trim() {
                "0" => {
                    if value != "-" {
                        for item in value.split(',') {
                            // factors carry their own ':'; re-join split pieces
                            zero.push(item.trim().parse()?);
                        }
                    }
                }
                "-" => minus = Some(value.parse()?),
                "+" => plus = Some(value.parse()?),
                other => return Err(Error::Parse(format!("bad descriptor prefix {other:?}"))),
            }
        }
        let minus =
            minus.ok_or_else(|| Error::Parse("descriptor is missing the minus part".into()))?;
        let plus =
            plus.ok_or_else(|| Error::Parse("descriptor is missing the plus part".into()))?;
        CentralizerDescriptor::new(group, zero, minus, plus)
    }
}

/// The coordinates `(x, Λ1, Λ2)` of an irreducible character in the series
/// of a descriptor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamTriple {
    pub x: Vec<Partition>,
    pub lambda1: Symbol,
    pub lambda2: Symbol,
}

impl ParamTriple {
    pub fn new(x: Vec<Partition>, lambda1: Symbol, lambda2: Symbol) -> Self {
        ParamTriple { x, lambda1, lambda2 }
    }

    pub fn unipotent(lambda2: Symbol) -> Self {
        ParamTriple { x: Vec::new(), lambda1: Symbol::empty(), lambda2 }
    }
}

impl fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = if self.x.is_empty() {
            "-".to_string()
        } else {
            self.x.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" / ")
        };
        write!(f, "x: {} | -: {} | +: {}", x, self.lambda1, self.lambda2)
    }
}

impl FromStr for ParamTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut x = Vec::new();
        let mut lambda1 = None;
        let mut lambda2 = None;
        for seg in s.split('|').map(str::trim) {
            let (prefix, value) = seg
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad triple segment {seg:?}")))?;
            let value = value.trim();
            match prefix.trim() {
                "x" => {
                    if value != "-" {
                        for item in value.split('/') {
                            x.push(item.trim().parse()?);
                        }
                    }
                }
                "-" => lambda1 = Some(value.parse()?),
                "+" => lambda2 = Some(value.parse()?),
                other => return Err(Error::Parse(format!("bad triple prefix {other:?}"))),
            }
        }
        let lambda1 =
            lambda1.ok_or_else(|| Error::Parse("triple is missing the minus symbol".into()))?;
        let lambda2 =
            lambda2.ok_or_else(|| Error::Parse("triple is missing the plus symbol".into()))?;
        Ok(ParamTriple { x, lambda1, lambda2 })
    }
}

/// True iff the symbol lies in the symbol set of the group.
pub fn symbol_in_group(s: &Symbol, tag: GroupTag) -> bool {
    s.rank() == tag.n && s.defect().rem_euclid(4) == tag.kind.defect_residue()
}

/// Whether a triple is well-formed for a descriptor: partition sizes match
/// the factors and the two symbols lie in the parts' symbol sets.
pub fn validate(descriptor: &CentralizerDescriptor, triple: &ParamTriple) -> bool {
    triple.x.len() == descriptor.zero.len()
        && triple
            .x
            .iter()
            .zip(&descriptor.zero)
            .all(|(p, f)| p.size() == f.size)
        && symbol_in_group(&triple.lambda1, descriptor.minus)
        && symbol_in_group(&triple.lambda2, descriptor.plus)
}

/// Tensoring by the sign character: transposes both symbol coordinates.
/// Defined for the even orthogonal groups.
pub fn sgn_action(t: &ParamTriple, g: GroupKind) -> Result<ParamTriple, Error> {
    if !matches!(g, GroupKind::Oplus | GroupKind::Ominus) {
        return Err(Error::UndefinedAction(g.to_string(), "sgn".into()));
    }
    Ok(ParamTriple::new(t.x.clone(), t.lambda1.transpose(), t.lambda2.transpose()))
}

/// Conjugation by a similitude element with non-square factor: transposes
/// the minus coordinate. Defined for symplectic and even orthogonal groups.
pub fn conjugate_action(t: &ParamTriple, g: GroupKind) -> Result<ParamTriple, Error> {
    if !matches!(g, GroupKind::Sp | GroupKind::Oplus | GroupKind::Ominus) {
        return Err(Error::UndefinedAction(g.to_string(), "conjugate".into()));
    }
    Ok(ParamTriple::new(t.x.clone(), t.lambda1.transpose(), t.lambda2.clone()))
}

/// Tensoring by the spinor character: swaps the two symbol coordinates and
/// the minus/plus parts of the descriptor. Defined for odd special
/// orthogonal and even orthogonal groups.
pub fn spinor_action(
    t: &ParamTriple,
    d: &CentralizerDescriptor,
) -> Result<(ParamTriple, CentralizerDescriptor), Error> {
    if !matches!(d.group.kind, GroupKind::SOodd | GroupKind::Oplus | GroupKind::Ominus) {
        return Err(Error::UndefinedAction(d.group.kind.to_string(), "spinor".into()));
    }
    let triple = ParamTriple::new(t.x.clone(), t.lambda2.clone(), t.lambda1.clone());
    let descriptor =
        CentralizerDescriptor::new(d.group, d.zero.clone(), d.plus, d.minus)?;
    Ok((triple, descriptor))
}

/// All triples with the same uniform projection: a singleton for odd
/// special orthogonal groups, the conjugation orbit for symplectic groups,
/// and the Klein-four orbit for even orthogonal groups. Degenerate symbol
/// coordinates collapse the orbit.
pub fn uniform_fiber(t: &ParamTriple, g: GroupKind) -> Vec<ParamTriple> {
    let mut out = vec![t.clone()];
    match g {
        GroupKind::SOodd => {}
        GroupKind::Sp => {
            out.push(conjugate_action(t, g).expect("conjugate defined for Sp"));
        }
        GroupKind::Oplus | GroupKind::Ominus => {
            let c = conjugate_action(t, g).expect("conjugate defined");
            let s = sgn_action(t, g).expect("sgn defined");
            let cs = sgn_action(&c, g).expect("sgn defined");
            out.extend([c, s, cs]);
        }
        _ => {}
    }
    let mut dedup = Vec::new();
    for t in out {
        if !dedup.contains(&t) {
            dedup.push(t);
        }
    }
    dedup
}

/// First-occurrence index contributed by one basic symbol coordinate:
/// `k` for the cuspidal symbols of `O^{ε_k}_{2k^2}` and `1` for the two
/// rank-one plus-type labels.
fn basic_index(s: &Symbol) -> Option<u32> {
    let one_zero: Symbol = "1;0".parse().unwrap();
    if *s == one_zero || *s == one_zero.transpose() {
        return Some(1);
    }
    if s.is_cuspidal() && s.defect() % 2 == 0 {
        return Some(s.defect().unsigned_abs() / 2);
    }
    None
}

/// The tower indices `(k', h')` of a basic character of an even orthogonal
/// group: `k'` read from the plus coordinate, `h'` from the minus one.
pub fn first_occurrence_indices(
    t: &ParamTriple,
    d: &CentralizerDescriptor,
) -> Result<(u32, u32), Error> {
    if !matches!(d.group.kind, GroupKind::Oplus | GroupKind::Ominus) {
        return Err(Error::UndefinedAction(
            d.group.kind.to_string(),
            "first-occurrence indices".into(),
        ));
    }
    let k = basic_index(&t.lambda2)
        .ok_or_else(|| Error::NonBasic(format!("plus coordinate {}", t.lambda2)))?;
    let h = basic_index(&t.lambda1)
        .ok_or_else(|| Error::NonBasic(format!("minus coordinate {}", t.lambda1)))?;
    Ok((k, h))
}

fn same_zero_part(
    d: &CentralizerDescriptor,
    dp: &CentralizerDescriptor,
    t: &ParamTriple,
    tp: &ParamTriple,
) -> bool {
    d.zero == dp.zero && t.x == tp.x
}

/// Coordinate form of the theta relation for the pair
/// (symplectic, odd special orthogonal): equal zero coordinates, the plus
/// coordinate of the left side equals the minus coordinate of the right,
/// and the left minus coordinate is theta-related to the right plus one.
///
/// `psi_twist` transposes the left minus coordinate first, matching the
/// effect of replacing the additive character by a non-square multiple.
pub fn theta_coordinates_sp_soodd(
    t: &ParamTriple,
    d: &CentralizerDescriptor,
    tp: &ParamTriple,
    dp: &CentralizerDescriptor,
    psi_twist: bool,
) -> Result<bool, Error> {
    if d.group.kind != GroupKind::Sp || dp.group.kind != GroupKind::SOodd {
        return Err(Error::ShapeMismatch(format!("({}, {})", d.group, dp.group)));
    }
    if !validate(d, t) || !validate(dp, tp) {
        return Err(Error::InvalidTriple("triple does not match its descriptor".into()));
    }
    let lambda1 = if psi_twist { t.lambda1.transpose() } else { t.lambda1.clone() };
    let eps = d.minus.kind.epsilon().expect("minus part of Sp is even orthogonal");
    Ok(same_zero_part(d, dp, t, tp)
        && d.plus == dp.minus
        && t.lambda2 == tp.lambda1
        && in_theta_relation(&lambda1, &tp.lambda2, eps))
}

/// Coordinate form of the theta relation for the pair
/// (symplectic, even orthogonal): equal zero and minus coordinates, and the
/// two plus coordinates theta-related with the orthogonal side on the left.
pub fn theta_coordinates_sp_oeven(
    t: &ParamTriple,
    d: &CentralizerDescriptor,
    tp: &ParamTriple,
    dp: &CentralizerDescriptor,
    psi_twist: bool,
) -> Result<bool, Error> {
    if d.group.kind != GroupKind::Sp
        || !matches!(dp.group.kind, GroupKind::Oplus | GroupKind::Ominus)
    {
        return Err(Error::ShapeMismatch(format!("({}, {})", d.group, dp.group)));
    }
    if !validate(d, t) || !validate(dp, tp) {
        return Err(Error::InvalidTriple("triple does not match its descriptor".into()));
    }
    let lambda1 = if psi_twist { t.lambda1.transpose() } else { t.lambda1.clone() };
    let eps = dp.plus.kind.epsilon().expect("plus part of an even orthogonal group");
    Ok(same_zero_part(d, dp, t, tp)
        && d.minus == dp.minus
        && lambda1 == tp.lambda1
        && in_theta_relation(&tp.lambda2, &t.lambda2, eps))
}
