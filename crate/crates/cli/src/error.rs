//! Error type for the command-line layer, with the exit-code mapping.

use std::fmt;

/// Failures a command can report. The variant decides the process exit code:
/// input and I/O problems exit 2, internal consistency failures exit 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// The arguments parse but violate a domain constraint.
    Input(String),
    /// Two independent computations of the same quantity disagreed. This
    /// signals a bug in the program itself, never bad user input.
    Consistency(String),
    /// A file could not be written.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Consistency(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Consistency(msg) => write!(f, "internal consistency failure: {msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<s3bundle::DomainError> for CliError {
    fn from(e: s3bundle::DomainError) -> Self {
        CliError::Input(e.to_string())
    }
}
