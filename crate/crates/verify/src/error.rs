use thiserror::Error;

pub type Result<T, E = VerifyError> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Core(#[from] dqspec_core::Error),

    #[error("unknown claim {0:?}")]
    UnknownClaim(String),

    #[error("parameters out of range for {claim}: {reason}")]
    OutOfRange { claim: String, reason: String },
}

impl VerifyError {
    pub(crate) fn range(claim: impl Into<String>, reason: impl Into<String>) -> Self {
        VerifyError::OutOfRange {
            claim: claim.into(),
            reason: reason.into(),
        }
    }
}
