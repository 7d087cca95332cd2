use std::collections::BTreeMap;

use wedgeops::families::{seeded, SeededRng};

use crate::report::CheckResult;

pub(crate) struct Outcome {
    measured: f64,
    details: String,
    degenerate: bool,
}

impl Outcome {
    pub(crate) fn new(measured: f64, details: impl Into<String>) -> Self {
        Self {
            measured,
            details: details.into(),
            degenerate: false,
        }
    }

    pub(crate) fn degenerate(measured: f64, details: impl Into<String>) -> Self {
        Self {
            measured,
            details: details.into(),
            degenerate: true,
        }
    }
}

/// Runs checks with independent seeded streams, one per check id, and
/// collects results. A check that errors is recorded as a failure.
pub(crate) struct Runner<'a> {
    seed: u64,
    overrides: &'a BTreeMap<String, f64>,
    results: Vec<CheckResult>,
}

impl<'a> Runner<'a> {
    pub(crate) fn new(seed: u64, overrides: &'a BTreeMap<String, f64>) -> Self {
        Self {
            seed,
            overrides,
            results: Vec::new(),
        }
    }

    pub(crate) fn check(
        &mut self,
        id: &str,
        default_tol: f64,
        f: impl FnOnce(&mut SeededRng) -> wedgeops::Result<Outcome>,
    ) {
        let tol = self.overrides.get(id).copied().unwrap_or(default_tol);
        let mut rng = seeded(self.seed, id);
        let result = match f(&mut rng) {
            Ok(o) if o.degenerate => {
                CheckResult::degenerate(id, o.measured, tol, self.seed, o.details)
            }
            Ok(o) => CheckResult::measure(id, o.measured, tol, self.seed, o.details),
            Err(e) => CheckResult::failed(id, tol, self.seed, format!("error: {e}")),
        };
        self.results.push(result);
    }

    /// Tolerance overrides that named no check that ran.
    pub(crate) fn unused_overrides(&self) -> Vec<String> {
        self.overrides
            .keys()
            .filter(|k| !self.results.iter().any(|r| &r.check_id == *k))
            .cloned()
            .collect()
    }

    pub(crate) fn finish(self) -> Vec<CheckResult> {
        self.results
    }
}
