use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),

    #[error("invalid weight assignment: {0}")]
    InvalidWeights(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("filling is not row-strict")]
    NotRowStrict,

    #[error("permutation {0} is not a fixed point")]
    NotFixedPoint(String),

    #[error("top part x_{index} = {value} exceeds {bound}")]
    TopPartOutOfRange { index: usize, value: usize, bound: usize },

    #[error("n = {n} exceeds the enumeration limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("expected a two-row shape (n-2,2) with n >= {min}, got {shape}")]
    NotTwoRowShape { shape: String, min: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
