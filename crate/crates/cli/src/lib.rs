//! Support code for the `complab` command-line tool: table builders, bar
//! diagrams, the `map` command and output formatting.

pub mod mapping;
pub mod render;
pub mod tables;

use std::fmt;
use std::str::FromStr;

use complab::bijection::BijectionError;
use complab::count::CountError;
use complab::verify::VerifyError;
use complab::{CompositionError, FamilyError, GenerateError};
use thiserror::Error;

/// Exit status for a failed check.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit status for usage, parse and domain errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Composition(#[from] CompositionError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(CliError::Usage(format!(
                "unknown format {other:?}; expected plain, csv or json"
            ))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}
