use std::collections::BTreeMap;

use serde::Serialize;

/// Outcome of one exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub degree_range: [usize; 2],
    pub counts: BTreeMap<String, u64>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, lo: usize, hi: usize) -> Self {
        CheckReport {
            check: check.into(),
            degree_range: [lo, hi],
            counts: BTreeMap::new(),
            passed: true,
            counterexample: None,
        }
    }

    pub fn count(mut self, key: &str, n: u64) -> Self {
        *self.counts.entry(key.to_string()).or_default() += n;
        self
    }

    /// Marks the check failed; only the first counterexample is kept.
    pub fn fail(mut self, counterexample: impl Into<String>) -> Self {
        if self.passed {
            self.passed = false;
            self.counterexample = Some(counterexample.into());
        }
        self
    }
}

/// All checks run against one presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub ell: usize,
    pub normalized_ell: usize,
    pub max_degree: usize,
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.checks.iter().find(|c| !c.passed)
    }
}
