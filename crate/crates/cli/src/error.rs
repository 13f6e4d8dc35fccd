use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] dqspec_core::Error),

    #[error(transparent)]
    Verify(#[from] dqspec_verify::VerifyError),

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Reports were produced and at least one of them failed.
    #[error("{0} verification report(s) failed")]
    Failed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_and_usage_errors_have_distinct_codes() {
        assert_eq!(CliError::Failed(2).exit_code(), 1);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        let cap = dqspec_core::Limits::default()
            .check_enumeration("search", 11)
            .unwrap_err();
        assert_eq!(CliError::from(cap).exit_code(), 2);
    }
}
