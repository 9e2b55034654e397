//! Pass/fail check reports shared by the verification routines and the CLI.

use std::fmt;

/// One named check with an optional witness describing a failure (or extra
/// detail on success).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// A titled list of checks; all randomness feeding it is seeded and echoed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub title: String,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), seed: None, checks: Vec::new() }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn record(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.checks.push(Check { name: name.into(), passed, witness });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.record(name, true, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.record(name, false, Some(witness.into()));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn merge(&mut self, other: Report) {
        for mut check in other.checks {
            check.name = format!("{}/{}", other.title, check.name);
            self.checks.push(check);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.title)?;
        if let Some(seed) = self.seed {
            writeln!(f, "seed: {seed}")?;
        }
        for check in &self.checks {
            let status = if check.passed { "pass" } else { "FAIL" };
            match &check.witness {
                Some(w) => writeln!(f, "  [{status}] {}: {w}", check.name)?,
                None => writeln!(f, "  [{status}] {}", check.name)?,
            }
        }
        Ok(())
    }
}
