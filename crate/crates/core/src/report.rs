//! Line-oriented verification reports with deterministic ordering.

use std::fmt;
use std::time::Duration;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn pass(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Pass,
            detail: detail.into(),
        }
    }

    pub fn fail(id: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Fail,
            detail: detail.into(),
        }
    }

    /// Summarize a sweep of `total` cases with the given failure labels.
    /// Failures are listed (capped) in the detail for diagnosis.
    pub fn counted(id: impl Into<String>, total: usize, failures: &[String]) -> Self {
        if failures.is_empty() {
            Check::pass(id, format!("{}/{} ok", total, total))
        } else {
            let mut shown: Vec<&String> = failures.iter().take(10).collect();
            shown.sort();
            Check::fail(
                id,
                format!(
                    "{}/{} ok; first failures: {}",
                    total - failures.len(),
                    total,
                    shown
                        .iter()
                        .map(|s| s.as_str())
                        .collect::<Vec<_>>()
                        .join("; ")
                ),
            )
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: Report) {
        for c in other.checks {
            self.checks.push(Check {
                id: format!("{}/{}", other.suite, c.id),
                ..c
            });
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// One `PASS/FAIL <id> <detail>` line per check; stable for diffing.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{} {}/{} {}\n", c.status, self.suite, c.id, c.detail));
        }
        let verdict = if self.all_pass() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{} suite {} ({} checks)\n",
            verdict,
            self.suite,
            self.checks.len()
        ));
        out
    }
}
