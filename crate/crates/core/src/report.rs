//! Pass/fail bookkeeping for the verification suites.

/// Outcome of running a family of identity checks.
///
/// A report records how many individual checks ran and a message for every
/// failure.  Suites are deterministic, so two runs with the same bounds
/// produce identical reports.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub name: String,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    /// Record one check; on failure, `label` is evaluated and stored.
    pub fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Fold another report into this one, prefixing its failures with its name.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        for f in other.failures {
            self.failures.push(format!("{}: {}", other.name, f));
        }
    }

    /// One-line summary, e.g. `inverse: 288 checks, all passed`.
    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{}: {} checks, all passed", self.name, self.checks)
        } else {
            format!(
                "{}: {} checks, {} FAILED",
                self.name,
                self.checks,
                self.failures.len()
            )
        }
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.summary())?;
        for failure in &self.failures {
            write!(f, "\n  FAIL {failure}")?;
        }
        Ok(())
    }
}
