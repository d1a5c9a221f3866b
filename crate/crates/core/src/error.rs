use thiserror::Error;

/// Input errors raised by the library. Every error is a precondition
/// violation by the caller; negative geometric answers are never errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constraint row {row} has {found} coefficients, expected {expected}")]
    RowLength { row: usize, found: usize, expected: usize },
    #[error("variable index {index} out of range for a system of {num_vars} variables")]
    VariableIndex { index: usize, num_vars: usize },
    #[error("point {index} has dimension {found}, expected {expected}")]
    Dimension { index: usize, found: usize, expected: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("point {0} is not in the set")]
    NotInSet(String),
    #[error("index {index} out of range for a set of {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("empty point set")]
    EmptyPointSet,
    #[error("face candidate must be non-empty")]
    EmptyFace,
    #[error("face candidate covers the whole point set")]
    WholeSet,
    #[error("expected two distinct points")]
    SamePoint,
    #[error("zero vector where a nonzero one is required")]
    ZeroVector,
    #[error("degenerate segment with equal endpoints {0}")]
    DegenerateSegment(String),
    #[error("not a canonical generator set: {0}")]
    NotCanonical(String),
    #[error("face size {k} exceeds the limit of {cap}")]
    FaceSizeLimit { k: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
