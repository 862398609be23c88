//! Pass/fail reports produced by the verification operations.

use std::fmt;

/// Outcome of one verification pass: how many facts were checked and which,
/// if any, failed. A zero violation count means the check passed. Only the
/// first few violation details are retained.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub name: String,
    pub checked: usize,
    pub violation_count: usize,
    pub violations: Vec<String>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            checked: 0,
            violation_count: 0,
            violations: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < 16 {
                self.violations.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS  {} ({} checks)", self.name, self.checked)
        } else {
            write!(
                f,
                "FAIL  {} ({} checks, {} violations; first: {})",
                self.name,
                self.checked,
                self.violation_count,
                self.violations.first().map(String::as_str).unwrap_or("")
            )
        }
    }
}
