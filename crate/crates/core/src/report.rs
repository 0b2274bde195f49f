//! Shared result types for the randomized check harnesses.

use std::fmt;

#[derive(Debug, Clone)]
pub struct Failure {
    pub description: String,
    /// A braid word reparseable by the braid-word grammar, when one exists.
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub trials: usize,
    pub seed: u64,
    pub failures: Vec<Failure>,
    /// Extra pass/fail lines that are reported but not required.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, trials: usize, seed: u64) -> Self {
        CheckReport {
            name: name.into(),
            trials,
            seed,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn fail(&mut self, description: impl Into<String>, counterexample: Option<String>) {
        self.failures.push(Failure {
            description: description.into(),
            counterexample,
        });
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} trials, seed {})",
            self.name,
            if self.pass() { "pass" } else { "FAIL" },
            self.trials,
            self.seed
        )?;
        for failure in &self.failures {
            writeln!(f, "  counterexample: {}", failure.description)?;
            if let Some(word) = &failure.counterexample {
                writeln!(f, "    braid: {}", word)?;
            }
        }
        for note in &self.notes {
            writeln!(f, "  note: {}", note)?;
        }
        Ok(())
    }
}
