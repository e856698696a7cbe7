use thiserror::Error;

/// Errors produced by sequence evaluation, enumeration and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// An exhaustive enumeration was requested past its tractable bound.
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    /// Two computations that must agree produced different values.
    #[error("mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
