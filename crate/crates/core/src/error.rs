use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension must be ≥ {min}, got {got}")]
    DimensionTooSmall { min: usize, got: usize },

    #[error("dimension {got} is above the supported maximum {max}")]
    DimensionTooLarge { max: usize, got: usize },

    #[error("dimension {m} is too large to enumerate {what} (cap is {cap})")]
    TooLargeToEnumerate { what: &'static str, m: usize, cap: usize },

    #[error("the brute-force oracle supports 2 ≤ m ≤ 4, got m = {0}; use m ≤ 4")]
    OracleScale(usize),

    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("empty vector")]
    EmptyVector,

    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("non-finite coordinate at position {0}")]
    NonFinite(usize),

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("negative tolerance {0}")]
    NegativeTolerance(f64),

    #[error("invalid sign vector: {0}")]
    InvalidSignVector(String),

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("region unbounded")]
    Unbounded,

    #[error("empty region")]
    Infeasible,

    #[error("simplex method stopped after {0} pivots")]
    IterationLimit(usize),
}
