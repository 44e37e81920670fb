//! Pass/fail reports produced by every checker.

use std::fmt;

use serde::Serialize;

/// Outcome of one named identity check over a finite window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    /// Identifier of the identity being checked, e.g. `borcherds-commutator`.
    pub id: String,
    pub passed: bool,
    /// Number of individual instances evaluated.
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.checks.extend(other.checks);
    }

    /// Sorts checks by id so that assembly order never leaks into output.
    pub fn sorted(mut self) -> Self {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "[{}] {} ({} cases)", if c.passed { "PASS" } else { "FAIL" }, c.id, c.cases)?;
            if let Some(w) = &c.witness {
                write!(f, " witness: {w}")?;
            }
            if let Some(n) = &c.note {
                write!(f, " note: {n}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Accumulates instances of a single identity, keeping the first witness.
#[derive(Debug)]
pub struct Tally {
    id: String,
    cases: u64,
    witness: Option<String>,
    note: Option<String>,
}

impl Tally {
    pub fn new(id: impl Into<String>) -> Self {
        Tally { id: id.into(), cases: 0, witness: None, note: None }
    }

    /// Records one instance; `witness` is only evaluated on failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.note = Some(note.into());
    }

    pub fn absorb(&mut self, other: Tally) {
        self.cases += other.cases;
        if self.witness.is_none() {
            self.witness = other.witness;
        }
    }

    /// Folds in a finished check of the same identity.
    pub fn absorb_check(&mut self, c: CheckResult) {
        self.cases += c.cases;
        if self.witness.is_none() {
            self.witness = c.witness;
        }
    }

    pub fn finish(self) -> CheckResult {
        CheckResult {
            passed: self.witness.is_none(),
            id: self.id,
            cases: self.cases,
            witness: self.witness,
            note: self.note,
        }
    }
}
