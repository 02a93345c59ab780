use num_bigint::BigUint;
use thiserror::Error;

/// A matrix text parse failure, positioned 1-indexed in the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("dimension {dim} exceeds the enumeration cap {cap}")]
    EnumerationCap { dim: usize, cap: usize },

    #[error("code of size 2^{log2_size} exceeds the enumeration cap 2^{cap}")]
    SizeCap { log2_size: usize, cap: usize },

    #[error("minimum weight of the zero code is undefined")]
    ZeroCode,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("search budget of {budget} nodes exceeded; the group found so far has order {lower_bound} (lower bound only)")]
    BudgetExceeded { budget: u64, lower_bound: BigUint },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a subgroup: strong generator {0} is not an element of the ambient group")]
    NotSubgroup(usize),

    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),

    #[error("catalog resource `{id}` failed its checksum")]
    Checksum { id: String },
}

pub type Result<T> = std::result::Result<T, Error>;
