use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::error::CliError;

pub const MAX_DIM: usize = 8;
pub const MAX_GRADE: usize = 8;
pub const MAX_DEGREE: usize = 40;
pub const MAX_TRIALS: usize = 10_000;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub dim: usize,
    pub degree: usize,
    pub grade: usize,
    pub trials: usize,
    pub seed: u64,
    /// Per-check tolerance overrides, keyed by check id.
    pub tolerances: BTreeMap<String, f64>,
    pub xi_files: Vec<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            dim: 3,
            degree: 6,
            grade: 2,
            trials: 20,
            seed: 0,
            tolerances: BTreeMap::new(),
            xi_files: Vec::new(),
        }
    }
}

impl RunConfig {
    /// Grade above dimension is allowed; the affected checks report
    /// degenerate instead.
    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: String| Err(CliError::Config(m));
        if self.dim == 0 || self.dim > MAX_DIM {
            return bad(format!("--dim must be in 1..={MAX_DIM}, got {}", self.dim));
        }
        if self.grade == 0 || self.grade > MAX_GRADE {
            return bad(format!(
                "--grade must be in 1..={MAX_GRADE}, got {}",
                self.grade
            ));
        }
        if self.degree > MAX_DEGREE {
            return bad(format!(
                "--degree must be at most {MAX_DEGREE}, got {}",
                self.degree
            ));
        }
        if self.trials == 0 || self.trials > MAX_TRIALS {
            return bad(format!(
                "--trials must be in 1..={MAX_TRIALS}, got {}",
                self.trials
            ));
        }
        for (id, t) in &self.tolerances {
            if !t.is_finite() || *t < 0.0 {
                return bad(format!(
                    "tolerance for {id} must be a finite nonnegative number"
                ));
            }
        }
        Ok(())
    }

    pub fn tolerance(&self, id: &str, default: f64) -> f64 {
        self.tolerances.get(id).copied().unwrap_or(default)
    }
}

/// `ID=VALUE`.
pub fn parse_tolerance(s: &str) -> Result<(String, f64), CliError> {
    let (id, value) = s
        .split_once('=')
        .ok_or_else(|| CliError::Config(format!("expected ID=VALUE, got {s:?}")))?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("tolerance {value:?} is not a number")))?;
    Ok((id.trim().to_string(), value))
}
