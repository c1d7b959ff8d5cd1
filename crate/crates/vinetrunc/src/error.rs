//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by structure validation, numerical routines, fitting,
/// testing, and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("tree {tree} is not a spanning tree: {reason}")]
    NotATree { tree: usize, reason: String },

    #[error("proximity violation in tree {tree}, edge {edge}: {reason}")]
    ProximityViolation {
        tree: usize,
        edge: usize,
        reason: String,
    },

    #[error("index out of range: {0}")]
    BadIndex(String),

    #[error("bad dimension {0}: need 2 <= d <= 16")]
    BadDimension(usize),

    #[error("bad truncation level {level} for dimension {d}")]
    BadTruncationLevel { level: usize, d: usize },

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("structure mismatch: {0}")]
    StructureMismatch(String),

    #[error("optimizer failed to converge within {0} iterations")]
    NonConvergence(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    #[error("singular information matrix: {0}")]
    SingularInformation(String),

    #[error("models are not nested: {0}")]
    NotNested(String),

    #[error("per-observation log-density differences have zero variance")]
    ZeroVariance,

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("empty cell: {0}")]
    EmptyCell(String),

    #[error("non-numeric input at row {row}, column {col}: {value:?}")]
    NonNumericInput {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
