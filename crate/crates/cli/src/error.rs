use gsm_core::Error;

/// Failures that end a command, grouped by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("invalid: {0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) | CliError::Parse(_) => 1,
            CliError::Infeasible(_) | CliError::Mismatch(_) => 2,
            CliError::Invalid(_) => 3,
        }
    }

    /// Maps a construction error: strength and positivity failures are
    /// infeasible, anything else is a bad argument.
    pub fn from_construction(e: Error) -> Self {
        match e {
            Error::Positivity { .. }
            | Error::OutOfRange { .. }
            | Error::InfeasibleX { .. }
            | Error::DegenerateBlock
            | Error::SymmetryViolated(_) => CliError::Infeasible(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Exit status of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    ValidationFailed = 3,
}
