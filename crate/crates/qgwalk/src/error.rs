//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two values live on different block shapes.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A descriptor or input file fails a structural check.
    #[error("validation failed: {0}")]
    Validation(String),

    /// A numerical procedure exceeded its residual tolerance.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// A computation would exceed a hard size guard.
    #[error("resource guard: {0}")]
    Resource(String),

    /// The operation is outside what this crate implements.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A closed-form bound was evaluated outside its hypothesis.
    #[error("hypothesis violated: {0}")]
    Domain(String),

    /// A CLI spec string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
