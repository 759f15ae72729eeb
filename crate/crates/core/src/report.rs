//! Named checks with expected and actual values, collected into run reports.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    /// Passes when both sides render to the same string.
    pub fn compare(name: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Check {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    /// A check with a free-form actual value, e.g. a list of counterexamples.
    pub fn outcome(name: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>, pass: bool) -> Check {
        Check {
            name: name.into(),
            expected: expected.into(),
            actual: actual.into(),
            pass,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: expected {}, got {}", self.name, self.expected, self.actual)
    }
}

/// A computed value with nothing to compare against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    #[serde(default)]
    pub facts: Vec<Fact>,
    #[serde(default)]
    pub checks: Vec<Check>,
    pub exit_status: i32,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            facts: Vec::new(),
            checks: Vec::new(),
            exit_status: 0,
        }
    }

    pub fn fact(&mut self, name: impl Into<String>, value: impl fmt::Display) {
        self.facts.push(Fact {
            name: name.into(),
            value: value.to_string(),
        });
    }

    pub fn push(&mut self, check: Check) {
        if !check.pass {
            self.exit_status = 1;
        }
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        for c in checks {
            self.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.facts {
            writeln!(f, "{}: {}", x.name, x.value)?;
        }
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        if self.checks.is_empty() {
            return Ok(());
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        writeln!(f, "{passed}/{} checks passed", self.checks.len())
    }
}
