pub mod af;
pub mod catalog;
pub mod corep;
pub mod irreps;
pub mod podles;
pub mod somu3;
pub mod su2;
pub mod umu2;
pub mod wang;

use std::fmt;

/// One itemized outcome of a symbolic check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn zero(label: impl Into<String>, residual: &impl fmt::Display, is_zero: bool) -> Self {
        Check { label: label.into(), passed: is_zero, detail: if is_zero { "0".into() } else { residual.to_string() } }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.label, self.detail)
    }
}
