//! Report-valued validation.

use std::fmt;

use crate::name::Name;

/// One violated axiom instance, with the offending cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub cells: Vec<Name>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, law: &'static str, cells: Vec<Name>, detail: impl Into<String>) {
        self.violations.push(Violation {
            law,
            cells,
            detail: detail.into(),
        });
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for v in &self.violations {
            write!(f, "[{}]", v.law)?;
            for c in &v.cells {
                write!(f, " {c}")?;
            }
            writeln!(f, ": {}", v.detail)?;
        }
        Ok(())
    }
}
