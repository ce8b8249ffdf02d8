use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("radicand mismatch: √{0} vs √{1}")]
    RadicandMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid prototype: {0}")]
    InvalidPrototype(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("split parameter exceeds δ: {0}")]
    ExceedsThreshold(String),
}

pub type Result<T> = std::result::Result<T, Error>;
