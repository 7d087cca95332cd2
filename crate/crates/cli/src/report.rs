use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check does not apply to this configuration (e.g. grade above
    /// dimension); it still fails if its measured value exceeds tolerance.
    Degenerate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub measured: f64,
    pub tolerance: f64,
    pub details: String,
    pub seed: u64,
}

impl CheckResult {
    /// Pass iff `measured ≤ tolerance`; NaN fails.
    pub fn measure(
        id: impl Into<String>,
        measured: f64,
        tolerance: f64,
        seed: u64,
        details: impl Into<String>,
    ) -> Self {
        let status = if measured <= tolerance {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            check_id: id.into(),
            status,
            measured: finite(measured),
            tolerance,
            details: details.into(),
            seed,
        }
    }

    pub fn degenerate(
        id: impl Into<String>,
        measured: f64,
        tolerance: f64,
        seed: u64,
        details: impl Into<String>,
    ) -> Self {
        let mut r = Self::measure(id, measured, tolerance, seed, details);
        if r.status == Status::Pass {
            r.status = Status::Degenerate;
        }
        r
    }

    pub fn failed(
        id: impl Into<String>,
        tolerance: f64,
        seed: u64,
        details: impl Into<String>,
    ) -> Self {
        Self {
            check_id: id.into(),
            status: Status::Fail,
            measured: f64::MAX,
            tolerance,
            details: details.into(),
            seed,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

// JSON has no infinities or NaN
fn finite(x: f64) -> f64 {
    if x.is_finite() {
        x
    } else {
        f64::MAX
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub degenerate: usize,
    pub checks: Vec<CheckResult>,
}

impl Report {
    /// Sorts checks by id, so the report does not depend on execution order.
    pub fn new(command: &str, seed: u64, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        Self {
            command: command.to_string(),
            seed,
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            degenerate: count(Status::Degenerate),
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn exit_code(&self) -> u8 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are finite")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Degenerate => "DEGN",
            };
            let _ = writeln!(
                s,
                "{tag} {:<40} measured={:.3e} tol={:.1e} seed={}  {}",
                c.check_id, c.measured, c.tolerance, c.seed, c.details
            );
        }
        let _ = writeln!(
            s,
            "{}: {} passed, {} failed, {} degenerate",
            self.command, self.passed, self.failed, self.degenerate
        );
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_tolerance() {
        assert_eq!(
            CheckResult::measure("a", 1e-13, 1e-12, 0, "").status,
            Status::Pass
        );
        assert_eq!(
            CheckResult::measure("a", 1e-11, 1e-12, 0, "").status,
            Status::Fail
        );
        assert_eq!(
            CheckResult::measure("a", f64::NAN, 1e-12, 0, "").status,
            Status::Fail
        );
        assert_eq!(
            CheckResult::degenerate("a", 0.0, 1e-12, 0, "").status,
            Status::Degenerate
        );
        assert_eq!(
            CheckResult::degenerate("a", 1.0, 1e-12, 0, "").status,
            Status::Fail
        );
    }

    #[test]
    fn report_is_sorted_and_serializable() {
        let r = Report::new(
            "suite",
            3,
            vec![
                CheckResult::measure("b", 0.0, 1.0, 3, ""),
                CheckResult::measure("a", f64::INFINITY, 1.0, 3, ""),
            ],
        );
        assert_eq!(r.checks[0].check_id, "a");
        assert_eq!(r.exit_code(), 1);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][0]["status"], "fail");
        assert_eq!(v["checks"][1]["seed"], 3);
    }
}
