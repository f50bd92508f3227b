//! Check reports.
//!
//! Verification routines never panic on a failed identity. They append a named
//! [`Check`] to a [`Report`] in a fixed order, so the first failing entry
//! identifies the earliest violated axiom.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::linear::{LinearMap, Vector};

/// Outcome of one named identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    /// Stable, human-readable identifier of the identity.
    pub name: String,
    /// Whether the identity holds exactly.
    pub passed: bool,
    /// Counterexample or diagnostic text; empty on success.
    pub detail: String,
}

/// An ordered list of checks about one subject.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Report {
    /// What the checks are about, e.g. `K(z3)`.
    pub subject: String,
    /// Checks in evaluation order.
    pub checks: Vec<Check>,
}

impl Report {
    /// An empty report.
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), checks: Vec::new() }
    }

    /// Appends a check.
    pub fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        let detail = if passed { String::new() } else { detail.into() };
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    /// Appends a passing check.
    pub fn pass(&mut self, name: impl Into<String>) {
        self.record(name, true, "");
    }

    /// Appends a failing check.
    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.record(name, false, detail);
    }

    /// Records whether two maps agree, naming the first differing basis vector.
    pub fn maps_equal(&mut self, name: &str, lhs: &LinearMap, rhs: &LinearMap, labels: &dyn Fn(usize) -> String) {
        if (lhs.dom(), lhs.cod()) != (rhs.dom(), rhs.cod()) {
            self.fail(name, format!("shape {}x{} vs {}x{}", lhs.cod(), lhs.dom(), rhs.cod(), rhs.dom()));
            return;
        }
        match lhs.first_difference(rhs) {
            None => self.pass(name),
            Some(j) => self.fail(
                name,
                format!("differs on {}: {} vs {}", labels(j), lhs.column(j), rhs.column(j)),
            ),
        }
    }

    /// Records whether two vectors agree.
    pub fn vectors_equal(&mut self, name: &str, lhs: &Vector, rhs: &Vector) {
        if lhs == rhs {
            self.pass(name);
        } else {
            self.fail(name, format!("{lhs} vs {rhs}"));
        }
    }

    /// Appends every check of `other`, prefixing names with its subject.
    pub fn absorb(&mut self, other: Report) {
        for c in other.checks {
            let name = if other.subject.is_empty() { c.name } else { format!("{}/{}", other.subject, c.name) };
            self.checks.push(Check { name, ..c });
        }
    }

    /// Records a whole report as one check that passes when it passed, quoting
    /// its first failure otherwise.
    pub fn summarize(&mut self, name: impl Into<String>, other: &Report) {
        let detail = other.first_failure().map(|c| format!("{}: {}", c.name, c.detail)).unwrap_or_default();
        self.record(name, other.passed(), detail);
    }

    /// True when every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The earliest failing check.
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// The check with the given name.
    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Number of failing checks.
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {}/{}", self.subject, c.name)?;
            if !c.passed {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Label closure naming basis vectors by index.
pub fn index_label(j: usize) -> String {
    j.to_string()
}
