use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition sizes differ: |{0}| != |{1}|")]
    SizeMismatch(String, String),

    #[error("partition length {len} exceeds rank {rank}")]
    LengthExceedsRank { len: usize, rank: usize },

    #[error("index {index} out of range {range}")]
    IndexOutOfRange { index: usize, range: String },

    #[error("polynomial division left a nonzero remainder (at exponent {0})")]
    InexactDivision(i64),

    #[error("negative exponent {0} where a polynomial was expected")]
    NegativeExponent(i64),

    #[error("generator is not homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("evaluation points must be pairwise distinct")]
    RepeatedPoints,

    #[error("multiplicity of {label} is not a nonnegative integer: {value}")]
    BadMultiplicity { label: String, value: String },

    #[error("ideal is not stable under the permutation action: {0}")]
    NotInvariant(String),

    #[error("filtration closed at dimension {got}, expected {expected}")]
    FiltrationIncomplete { got: u64, expected: u64 },

    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
