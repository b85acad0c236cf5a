//! Library half of the `pairdom` binary: input resolution, the
//! subcommands, and the deterministic parallel corpus scan.

pub mod commands;
pub mod input;
pub mod scan;

use std::process::ExitCode;

use pairdom_core::weight::WeightError;
use pairdom_core::{GraphError, SolveError};
use thiserror::Error;

/// Errors surfaced to the user, each with a fixed exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("certificate verdict is false")]
    NotCertified,
    #[error("certification needs a connected cubic graph: {0}")]
    NotCubic(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Solve(SolveError::IsolatedVertex(_)) => 3,
            CliError::NotCertified => 4,
            CliError::NotCubic(_) => 5,
            CliError::Solve(_) | CliError::Failed(_) | CliError::Io(_) => 1,
        }
    }

    pub fn to_exit(&self) -> ExitCode {
        ExitCode::from(self.exit_code())
    }
}

impl From<WeightError> for CliError {
    fn from(e: WeightError) -> Self {
        match e {
            WeightError::NotCubic => CliError::NotCubic("graph is not cubic".into()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Parse(e.to_string())
    }
}
