use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid mixed strategy: {0}")]
    InvalidStrategy(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("game is not symmetric")]
    NotSymmetric,

    #[error("expected a {expected} matrix, got {rows}x{cols}")]
    WrongShape {
        expected: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("need at least {needed} strategies, got {found}")]
    TooFewStrategies { needed: usize, found: usize },

    #[error("strategy index {index} out of range for {count} strategies")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("{count} strategies exceed the enumeration cap of {cap}")]
    TooLarge { count: usize, cap: usize },

    #[error("columns {columns:?} contain repeated entries")]
    NonGeneric { columns: Vec<usize> },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
