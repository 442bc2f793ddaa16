use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

/// `Ok(detail)` on success, `Err(counterexample)` on failure.
pub type CheckResult = Result<Option<String>, String>;

type CheckFn = Box<dyn Fn() -> CheckResult + Send + Sync>;

/// A named check at a fixed `n`, not yet run.
pub struct Check {
    name: &'static str,
    n: usize,
    run: CheckFn,
}

impl Check {
    pub fn new(name: &'static str, n: usize, run: impl Fn() -> CheckResult + Send + Sync + 'static) -> Self {
        Check { name, n, run: Box::new(run) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Kept out of the serialized report so reruns are byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n_min: usize,
    pub n_max: usize,
    pub checks: Vec<CheckOutcome>,
}

fn panic_message(payload: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "unknown panic".to_string()
    }
}

impl VerificationReport {
    /// Runs the checks concurrently; outcomes keep the order of `checks`.
    pub fn run(suite: &str, n_min: usize, n_max: usize, checks: Vec<Check>) -> Self {
        let checks = checks
            .into_par_iter()
            .map(|check| {
                let start = Instant::now();
                let result = catch_unwind(AssertUnwindSafe(|| (check.run)()))
                    .unwrap_or_else(|p| Err(format!("panicked: {}", panic_message(p))));
                let elapsed = start.elapsed();
                let (status, detail) = match result {
                    Ok(detail) => (Status::Pass, detail),
                    Err(witness) => (Status::Fail, Some(witness)),
                };
                CheckOutcome { name: check.name.to_string(), n: check.n, status, detail, elapsed }
            })
            .collect();
        VerificationReport { suite: suite.to_string(), n_min, n_max, checks }
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Pass).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.checks.len()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = write!(out, "{tag}  {}  n={}  {}", self.suite, c.n, c.name);
            if let Some(d) = &c.detail {
                let _ = write!(out, "  {d}");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{}: {} of {} checks passed (n={}..{})",
            self.suite,
            self.passed(),
            self.checks.len(),
            self.n_min,
            self.n_max
        );
        out
    }

    pub fn render_timings(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{}  n={}  {}  {:.3} s", self.suite, c.n, c.name, c.elapsed.as_secs_f64());
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
