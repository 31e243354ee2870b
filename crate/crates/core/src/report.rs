//! Structured pass/fail reports for exhaustive equation checks.
//!
//! Checkers never abort on a failed equation; they record the verdict and the
//! lexicographically least counterexample so callers (and the CLI) can decide
//! what to do with it. All checks iterate their tuple space in lexicographic
//! order, so the first failure found is the least witness.

use std::fmt;

/// Outcome of one exhaustively checked equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// Stable identifier for the equation, e.g. `"braid-relation"`.
    pub name: &'static str,
    pub pass: bool,
    /// Least tuple violating the equation, present exactly when `pass` is false.
    pub witness: Option<Vec<usize>>,
}

impl Check {
    pub fn pass(name: &'static str) -> Self {
        Check { name, pass: true, witness: None }
    }

    pub fn fail(name: &'static str, witness: Vec<usize>) -> Self {
        Check { name, pass: false, witness: Some(witness) }
    }

    pub fn from_witness(name: &'static str, witness: Option<Vec<usize>>) -> Self {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "{}: PASS", self.name)
        } else {
            match &self.witness {
                Some(w) => write!(f, "{}: FAIL at {:?}", self.name, w),
                None => write!(f, "{}: FAIL", self.name),
            }
        }
    }
}

/// A bundle of checks run against one object.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(checks: Vec<Check>) -> Self {
        CheckReport { checks }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
