//! Verification harness: the worked examples as golden checks, a seeded
//! property suite over every library invariant, and a Poc basis calculator.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for bad
//! flags, files or symbols.

pub mod config;
pub mod error;
pub mod examples;
pub mod poc;
pub mod report;
mod runner;
pub mod suite;

use std::path::Path;

use wedgeops::hardy::VecTrigPoly;

pub use config::RunConfig;
pub use error::CliError;
pub use report::{CheckResult, Report, Status};

/// Reads a series in the JSON series format.
pub fn load_series(path: &Path) -> Result<VecTrigPoly, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    VecTrigPoly::from_json(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
