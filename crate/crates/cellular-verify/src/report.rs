use std::fmt;

/// Maximum number of violation certificates kept in a report. Further
/// violations are still counted, just not stored.
pub(crate) const MAX_VIOLATIONS: usize = 16;

/// Outcome of an axiom or condition check over a whole algebra.
///
/// `pass` is true iff no violation was found. `checked` counts the individual
/// assertions that were evaluated (products inspected, labels round-tripped,
/// slices compared). `violations` holds up to [`MAX_VIOLATIONS`] certificate
/// strings, each naming the offending tuple; `violation_count` is the true
/// total.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub label: String,
    pub pass: bool,
    pub checked: u64,
    pub violations: Vec<String>,
    pub violation_count: u64,
}

impl VerifyReport {
    pub(crate) fn new(label: impl Into<String>) -> Self {
        VerifyReport {
            label: label.into(),
            pass: true,
            checked: 0,
            violations: Vec::new(),
            violation_count: 0,
        }
    }

    pub(crate) fn record(&mut self, certificate: String) {
        self.pass = false;
        self.violation_count += 1;
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(certificate);
        }
    }

    pub(crate) fn absorb(&mut self, other: PartialOutcome) {
        self.checked += other.checked;
        for cert in other.violations {
            self.record(cert);
        }
        self.violation_count += other.overflow;
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} ({} checks, {} violations)",
            self.label,
            if self.pass { "pass" } else { "FAIL" },
            self.checked,
            self.violation_count
        )?;
        for v in &self.violations {
            writeln!(f, "  violation: {v}")?;
        }
        if self.violation_count as usize > self.violations.len() {
            writeln!(
                f,
                "  … {} further violations suppressed",
                self.violation_count as usize - self.violations.len()
            )?;
        }
        Ok(())
    }
}

/// Per-shard tally used by the parallel sweeps: merged into a `VerifyReport`
/// in deterministic (index) order.
#[derive(Clone, Debug, Default)]
pub(crate) struct PartialOutcome {
    pub checked: u64,
    pub violations: Vec<String>,
    /// Violations beyond the per-shard cap (still counted).
    pub overflow: u64,
}

impl PartialOutcome {
    pub(crate) fn tick(&mut self) {
        self.checked += 1;
    }

    pub(crate) fn record(&mut self, certificate: String) {
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(certificate);
        } else {
            self.overflow += 1;
        }
    }
}
