use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unsupported size: {0}")]
    Capability(String),

    #[error("outside the domain: {0}")]
    Domain(String),

    #[error("precondition violated: {what} (deviation {deviation:e})")]
    Precondition { what: String, deviation: f64 },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_err(msg: impl Into<String>) -> Error {
    Error::Dimension(msg.into())
}
