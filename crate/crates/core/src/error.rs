use thiserror::Error;

use crate::scalar::Mode;

pub type Result<T> = std::result::Result<T, EsymError>;

/// Errors raised by the library. Every variant is a caller mistake; the
/// CLI maps all of them to exit status 2.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EsymError {
    #[error("arithmetic mode mismatch: {left} vs {right}")]
    ModeMismatch { left: Mode, right: Mode },

    #[error("assignment must contain at least one value")]
    EmptyAssignment,

    #[error("{what} {index} out of range 1..={bound}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("ambient generator count mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("assignment has {got} values but the polynomial has {expected} generators")]
    LengthMismatch { expected: usize, got: usize },

    #[error("labels ({labels}) do not match values ({values})")]
    LabelMismatch { labels: usize, values: usize },

    #[error("cannot deflate a constant polynomial")]
    ConstantDeflation,

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },
}

impl EsymError {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        EsymError::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
