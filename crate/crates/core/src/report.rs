//! Pass/fail reports for verification suites.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::tolerance::EXACT;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub label: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// `pass` is `residual < tolerance`, so a NaN residual fails.
    pub fn new(label: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self { label: label.into(), residual, tolerance, pass: residual < tolerance }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checks: Vec::new(), passed: 0, failed: 0 }
    }

    pub fn push(&mut self, label: impl Into<String>, residual: f64, tolerance: f64) {
        self.add(Check::new(label, residual, tolerance));
    }

    pub fn add(&mut self, check: Check) {
        if check.pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.checks.push(check);
    }

    /// Append another report's checks, prefixing labels with its suite name.
    pub fn absorb(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.add(Check { label: format!("{}: {}", other.suite, c.label), ..c });
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.residual).fold(0.0, f64::max)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for c in &self.checks {
            let mark = if c.pass { "PASS" } else { "FAIL" };
            let tol = if c.tolerance <= EXACT { "exact".to_string() } else { format!("{:.0e}", c.tolerance) };
            writeln!(f, "  {mark}  {:<56} residual {:.3e}  tol {tol}", c.label, c.residual)?;
        }
        write!(f, "{} passed, {} failed", self.passed, self.failed)
    }
}
