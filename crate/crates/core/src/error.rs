use std::path::PathBuf;

use thiserror::Error;

/// Why a candidate multiplication table was rejected.
///
/// Indices are reported in the labelling of the table as it was supplied,
/// before the identity is renumbered to 0.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({row},{col}) = {value} is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("row {0} is not a permutation of the element set")]
    RowNotPermutation(usize),
    #[error("column {0} is not a permutation of the element set")]
    ColumnNotPermutation(usize),
    #[error("associativity fails at ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("invalid group table: {0}")]
    Validation(#[from] ValidationError),
    #[error("group order {order} exceeds the configured cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("permutation closure exceeded the cap of {cap} after {found} elements")]
    ClosureExceeded { cap: usize, found: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{m} does not divide {n}")]
    NotDivisor { n: u64, m: u64 },
    #[error("subgroup is not normal{0}")]
    NotNormal(&'static str),
    #[error("subgroup H is not contained in K")]
    NotContained,
    #[error("orders {0} and {1} are not coprime")]
    NotCoprime(usize, usize),
    #[error("group {0} is not nilpotent; use the conjecture sweep instead")]
    NotNilpotent(String),
    #[error("invalid parameter: {0}")]
    Domain(String),
    #[error("parse error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("{}:{line}: {msg}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },
    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
