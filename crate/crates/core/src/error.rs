use thiserror::Error;

/// Errors raised by the analysis toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {dim} is outside the supported range 1..={max}")]
    DimensionOutOfRange { dim: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("value {value:#x} does not fit in {dim} bits")]
    ValueOutOfRange { value: u64, dim: usize },

    #[error("connection set is empty")]
    EmptyConnectionSet,

    #[error("connection set contains the zero vector")]
    ZeroElement,

    #[error("connection set repeats the element {0}")]
    DuplicateElement(String),

    #[error("target vertex must be nonzero")]
    ZeroTarget,

    #[error("gcd parameter must be at least 1")]
    ZeroDelta,

    #[error("invalid rational multiple of pi: {0}")]
    InvalidTime(String),

    #[error("invalid bit string {0:?}")]
    InvalidBitString(String),

    #[error("{0}")]
    Degenerate(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("scan budget exhausted after {completed} of {total} chunks; resume from the checkpoint")]
    BudgetExceeded { completed: u32, total: u32 },

    #[error("checkpoint: {0}")]
    Checkpoint(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
