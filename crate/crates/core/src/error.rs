use thiserror::Error;

/// Errors produced by the library.
///
/// The command line maps every variant to exit status 2 except
/// [`Error::Internal`], which signals a broken invariant.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field size {0} is not a prime power in [2, 256]")]
    InvalidFieldSize(usize),

    #[error("element {element} is not in GF({q})")]
    ElementOutOfRange { element: usize, q: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{what} index {index} out of range (limit {limit})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
