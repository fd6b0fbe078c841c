//! Report types shared by all verification suites.

use serde::Serialize;
use std::time::Duration;

/// Outcome of a single exhaustive or numerical check.
///
/// A failing check records the first counterexample in canonical enumeration
/// order, so reruns are deterministic.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Number of cases evaluated.
    pub cases: u64,
    /// First counterexample in canonical order, if any.
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn pass(name: impl Into<String>, cases: u64) -> Self {
        Self {
            name: name.into(),
            cases,
            counterexample: None,
        }
    }

    pub fn fail(name: impl Into<String>, cases: u64, witness: String) -> Self {
        Self {
            name: name.into(),
            cases,
            counterexample: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Two readings of the same printed statement, checked side by side.
#[derive(Debug, Clone, Serialize)]
pub struct DualCheckReport {
    pub as_printed: CheckReport,
    pub variant: CheckReport,
}

/// Status of a suite check.
///
/// `RefutedAsPrinted` is distinct from `Fail`: it marks a statement whose
/// literal form is known to have a counterexample, reported as a finding.
/// Only whitelisted checks may carry it without failing the run, so a real
/// regression can never hide behind a known refutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    RefutedAsPrinted,
}

/// One line of a suite report.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    /// Stable identifier of the claim this check verifies.
    pub claim: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    /// Wall-clock duration; excluded from JSON so reports stay byte-stable.
    #[serde(skip)]
    pub duration: Duration,
}

impl SuiteCheck {
    pub fn from_report(claim: &str, report: &CheckReport, duration: Duration) -> Self {
        Self {
            name: report.name.clone(),
            claim: claim.to_string(),
            status: if report.passed() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            counterexample: report.counterexample.clone(),
            duration,
        }
    }
}

/// Machine-readable report for one verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
            checks: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, check: SuiteCheck) {
        self.checks.push(check);
    }

    /// Sort checks by name for order-canonical output.
    pub fn canonicalize(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    /// True when no check has status `Fail` and every `RefutedAsPrinted`
    /// check is in the expected whitelist.
    pub fn acceptable(&self, whitelist: &[&str]) -> bool {
        self.checks.iter().all(|c| match c.status {
            CheckStatus::Pass => true,
            CheckStatus::Fail => false,
            CheckStatus::RefutedAsPrinted => whitelist.contains(&c.name.as_str()),
        })
    }
}
