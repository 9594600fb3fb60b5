use thiserror::Error;

/// Errors shared across the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("operation requires a field, got {0}")]
    UnsupportedRing(String),

    #[error("morphism is not idempotent")]
    NotIdempotent,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not a valid extension element: {0}")]
    InvalidExtension(String),

    #[error("not a member of the weak idempotent completion: {0}")]
    Membership(String),

    #[error("generator produced ill-typed data: {0}")]
    Generation(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
