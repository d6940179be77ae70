//! Exact combinatorics of Lusztig symbols for finite classical groups:
//! partitions and bipartitions, symbols with their rank/defect invariants,
//! special symbols and families, hyperoctahedral character tables over
//! Q[sqrt(2)], almost characters and uniform projections, cells, the
//! symbol-level theta relation, and the parameter algebra of the modified
//! Lusztig correspondence.
//!
//! Everything is finite combinatorial data computed with exact arithmetic;
//! the statements the library encodes are machine-checkable at small rank
//! and the test suite does exactly that.

use thiserror::Error as ThisError;

pub mod almost;
pub mod cells;
pub mod lusztig;
pub mod partitions;
pub mod scalar;
pub mod special;
pub mod symbols;
pub mod theta;
pub mod verify;
pub mod weyl;

pub use partitions::{BiPartition, Partition};
pub use scalar::Sqrt2Rational;
pub use special::{SinglesSubset, SpecialSymbol};
pub use symbols::{CopyLabel, GroupKind, GroupTag, LabeledSymbol, Symbol};

/// Crate-wide error type.
#[derive(Debug, Clone, ThisError)]
pub enum Error {
    #[error("invalid partition parts {0}")]
    InvalidPartition(String),
    #[error("invalid symbol rows {0}")]
    InvalidSymbol(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("symbol {0} is not special")]
    NotSpecial(String),
    #[error("invalid singles subset: {0}")]
    InvalidSubset(String),
    #[error("subsets belong to different special symbols {0} and {1}")]
    OwnerMismatch(String, String),
    #[error("special symbol {0} has the wrong defect for group kind {1}")]
    DefectMismatch(String, String),
    #[error("no special family contains {0}")]
    NoSpecialFamily(String),
    #[error("class functions have different ranks {0} and {1}")]
    RankMismatch(u32, u32),
    #[error("element is not a signed permutation: {0}")]
    InvalidSignedPermutation(String),
    #[error("inadmissible pair subset for {0}")]
    InadmissiblePairSubset(String),
    #[error("{0}")]
    Precondition(String),
    #[error("invalid centralizer descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("parameter triple does not match descriptor: {0}")]
    InvalidTriple(String),
    #[error("action undefined for group kind {0}: {1}")]
    UndefinedAction(String, String),
    #[error("triple is outside the basic-character regime: {0}")]
    NonBasic(String),
    #[error("descriptor shapes do not match the dual pair {0}")]
    ShapeMismatch(String),
}
