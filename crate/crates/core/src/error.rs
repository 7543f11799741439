use thiserror::Error;

/// Errors produced by the toolkit.
///
/// `CapExceeded` is a *refusal*, not a failure: the requested computation is
/// well defined but falls outside the configured desk-scale caps. Refusals
/// always name the offending size and the cap that would have to be raised.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("{what} has size {size}, which exceeds the cap {cap} ({cap_name})")]
    CapExceeded {
        what: String,
        size: String,
        cap: String,
        cap_name: &'static str,
    },

    #[error("{0} is not a subgroup of {1}")]
    NotSubgroup(String, String),

    #[error("subgroup is not normal in the ambient group")]
    NotNormal,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Refusal constructor used by every capped operation.
    pub fn cap(what: impl Into<String>, size: impl ToString, cap: impl ToString, cap_name: &'static str) -> Self {
        Error::CapExceeded {
            what: what.into(),
            size: size.to_string(),
            cap: cap.to_string(),
            cap_name,
        }
    }

    /// True when the error is a cap refusal rather than a hard failure.
    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
