//! Identity verification suites and their reports.
//!
//! Each suite runs one family of identities over a fixed parameter range and
//! records the largest deviation seen against the tolerance for that family.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteCheck {
    pub label: String,
    pub cases: usize,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl SuiteCheck {
    pub fn new(label: impl Into<String>, tolerance: f64) -> Self {
        Self { label: label.into(), cases: 0, max_deviation: 0.0, tolerance, passed: true }
    }

    /// Records one deviation; NaN counts as a failure.
    pub fn record(&mut self, deviation: f64) {
        self.cases += 1;
        if deviation.is_nan() {
            self.max_deviation = f64::INFINITY;
        } else {
            self.max_deviation = self.max_deviation.max(deviation);
        }
        self.passed = self.max_deviation <= self.tolerance;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_deviation(&self) -> f64 {
        self.checks.iter().map(|c| c.max_deviation).fold(0.0, f64::max)
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{:<13} {:<44} cases={:<6} max_dev={:.3e} tol={:.1e} {}",
                self.name,
                c.label,
                c.cases,
                c.max_deviation,
                c.tolerance,
                if c.passed { "PASS" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// Relative deviation scaled by `max(1, |reference|)`.
pub fn scaled_deviation(value: f64, reference: f64) -> f64 {
    (value - reference).abs() / reference.abs().max(1.0)
}

/// Plain relative deviation.
pub fn relative_deviation(value: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        value.abs()
    } else {
        (value - reference).abs() / reference.abs()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Identity {
    SN,
    IdGeg,
    Poisson,
    Factorization,
    Dirichlet,
    AltSum,
    Duplication,
    Gauss2F1Closed,
    DiskBessel,
}

impl Identity {
    pub const ALL: [Identity; 9] = [
        Identity::SN,
        Identity::IdGeg,
        Identity::Poisson,
        Identity::Factorization,
        Identity::Dirichlet,
        Identity::AltSum,
        Identity::Duplication,
        Identity::Gauss2F1Closed,
        Identity::DiskBessel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::SN => "sN",
            Identity::IdGeg => "idgeg",
            Identity::Poisson => "poisson",
            Identity::Factorization => "factorization",
            Identity::Dirichlet => "dirichlet",
            Identity::AltSum => "altsum",
            Identity::Duplication => "duplication",
            Identity::Gauss2F1Closed => "2f1closed",
            Identity::DiskBessel => "diskbessel",
        }
    }

    pub fn run(self, seed: u64) -> Result<SuiteOutcome> {
        use crate::{dihedral, laplace, simplex, special};
        match self {
            Identity::SN => dihedral::identities::s_n_suite(seed),
            Identity::IdGeg => dihedral::identities::idgeg_suite(seed),
            Identity::Poisson => {
                let mut out = special::identities::poisson_suite(seed)?;
                out.checks.extend(dihedral::identities::generating_function_suite(seed)?.checks);
                Ok(out)
            }
            Identity::Factorization => special::identities::factorization_suite(seed),
            Identity::Dirichlet => simplex::identities::dirichlet_suite(seed),
            Identity::AltSum => special::identities::alternating_sum_suite(),
            Identity::Duplication => special::identities::duplication_suite(seed),
            Identity::Gauss2F1Closed => special::identities::gauss_closed_form_suite(),
            Identity::DiskBessel => laplace::identities::disk_bessel_suite(seed),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Identity::ALL
            .iter()
            .copied()
            .find(|i| i.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<_> = Identity::ALL.iter().map(|i| i.name()).collect();
                format!("unknown identity '{s}', expected one of {}", names.join(", "))
            })
    }
}
