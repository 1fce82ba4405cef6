//! Runner, report formats and tables on top of `kostant-core`.

pub mod params;
pub mod random;
pub mod report;
pub mod run;
pub mod tables;

use std::fmt;

/// Errors surfaced to the command line.
#[derive(Debug)]
pub enum CliError {
    /// Invalid configuration or arguments; exit code 2.
    Usage(String),
    /// Output could not be written.
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

impl From<kostant_core::Error> for CliError {
    fn from(e: kostant_core::Error) -> CliError {
        CliError::Usage(e.to_string())
    }
}
