use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },

    #[error("subspace containment violated: {0}")]
    ContainmentViolation(String),

    #[error("entry budget exceeded building {context}: {rows}x{cols} > {budget}")]
    BudgetExceeded {
        context: String,
        rows: usize,
        cols: usize,
        budget: u64,
    },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("missing structure: {0}")]
    StructureMissing(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("fundamental decomposition failed: {0}")]
    DecompositionFailure(String),

    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),

    #[error("characteristic conflict: {0}")]
    CharacteristicConflict(String),

    #[error("invalid coefficient {text:?}: {reason}")]
    InvalidCoefficient { text: String, reason: String },

    #[error("{0} is not prime")]
    NonPrime(u64),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("convention mismatch: {0}")]
    ConventionMismatch(String),

    #[error("assertion failed: {0}")]
    AssertionFailed(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
