use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polynomial is reducible; factors: {}", .0.join(", "))]
    Reducible(Vec<String>),

    #[error("rectangle does not isolate exactly one root: {0}")]
    BadRectangle(String),

    #[error("dependence search exhausted its box without a certificate: {0}")]
    Inconclusive(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
