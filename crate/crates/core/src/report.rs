//! Uniform pass/fail reports for identity checks.

use serde::{Deserialize, Serialize};

/// Outcome of checking one identity over a family of instances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub instances: usize,
    pub failures: usize,
    /// First few failing instances, for diagnosis.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

const MAX_DETAILS: usize = 8;

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        Self { check: check.into(), instances: 0, failures: 0, details: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.details.len() < MAX_DETAILS {
                self.details.push(detail());
            }
        }
    }

    pub fn fail(&mut self, detail: impl Into<String>) {
        self.record(false, || detail.into());
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.instances += other.instances;
        self.failures += other.failures;
        for d in other.details {
            if self.details.len() < MAX_DETAILS {
                self.details.push(format!("{}: {d}", other.check));
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.instances > 0
    }
}
