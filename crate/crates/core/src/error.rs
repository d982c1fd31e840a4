//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Two tensor shapes that were required to agree do not.
    #[error("{op}: shape mismatch: {lhs:?} vs {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// A single shape or dimension argument is invalid for the operation.
    #[error("{op}: {detail}")]
    Dimension { op: &'static str, detail: String },

    /// Invalid configuration (model config, window spec, CLI arguments).
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Non-finite values or numeric blow-up where finite data is required.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// An API contract was violated (stale index, empty attention row, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Malformed file contents (NTF container, checkpoint, config file, CSV).
    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Image(#[from] image::ImageError),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(op: &'static str, lhs: &[usize], rhs: &[usize]) -> Self {
        Error::ShapeMismatch {
            op,
            lhs: lhs.to_vec(),
            rhs: rhs.to_vec(),
        }
    }

    pub(crate) fn dim(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Dimension {
            op,
            detail: detail.into(),
        }
    }
}
