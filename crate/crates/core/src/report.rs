use serde::{Deserialize, Serialize};

/// A named PASS/FAIL verdict with human-readable witnesses for failures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, witnesses: Vec::new() }
    }

    /// Passes iff `witnesses` is empty.
    pub fn from_witnesses(name: impl Into<String>, witnesses: Vec<String>) -> Self {
        Check { name: name.into(), passed: witnesses.is_empty(), witnesses }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
