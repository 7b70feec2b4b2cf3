use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("unsupported diagram: {0}")]
    UnsupportedDiagram(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("operation requires a field, got {0}")]
    FieldRequired(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("element not in span: {0}")]
    NotInSpan(String),
    #[error("basis is not free: {0}")]
    ViolatedFreeness(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
