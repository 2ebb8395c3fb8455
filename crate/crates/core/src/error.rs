use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed segment: end {end} minus start {start} is not a nonnegative integer")]
    MalformedSegment { start: String, end: String },
    #[error("not a segment: union of {0} and {1} is not an unbroken interval")]
    NotASegment(String, String),
    #[error("segments lie on different lines: {0} and {1}")]
    CrossLine(String, String),
    #[error("unknown line id `{0}`")]
    UnknownLine(String),
    #[error("invalid line declaration: {0}")]
    InvalidLine(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("segment {0} is not unitary")]
    NotUnitary(String),
    #[error("segments {0} and {1} are not linked")]
    NotLinked(String, String),
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("no ordering satisfies the extraction condition")]
    NoOrdering,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
