use thiserror::Error;

/// Errors produced by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Text could not be read as a base-60 numeral.
    #[error("parse error: {0}")]
    Parse(String),

    /// A result does not fit the fixed abacus capacity.
    #[error("overflow: {0}")]
    Overflow(String),

    /// A request exceeds a configured safety cap.
    #[error("resource limit: {0}")]
    Resource(String),

    /// A figure cannot be laid out on the requested canvas.
    #[error("layout error: {0}")]
    Layout(String),
}

pub type Result<T> = std::result::Result<T, Error>;
