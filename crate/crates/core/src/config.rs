//! Evaluation settings and result records shared by all representations.

use serde::Serialize;

use crate::scalar::Real;
use crate::simplex::QuadratureScheme;
use crate::summation::Summation;

/// Seed used when none is supplied.
pub const DEFAULT_SEED: u64 = 0x5EED_D1ED_0001;

/// Truncation, tolerance and quadrature settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig<T> {
    /// Relative tolerance on per-degree contributions.
    pub rel_tol: T,
    /// Absolute floor for the stopping test.
    pub abs_tol: T,
    /// Consecutive small degrees required before a series is declared converged.
    pub window: usize,
    /// Degree cap for every truncated series.
    pub max_terms: usize,
    pub summation: Summation,
    pub scheme: QuadratureScheme,
    /// Upper bound on inner terms enumerated by composition sums.
    pub composition_cap: u64,
    /// Skip reduction of input angles into the closed wedge.
    pub raw_angles: bool,
}

impl<T: Real> Default for EvalConfig<T> {
    fn default() -> Self {
        Self {
            rel_tol: T::epsilon(),
            abs_tol: T::min_positive_value(),
            window: 5,
            max_terms: 4000,
            summation: Summation::Compensated,
            scheme: QuadratureScheme::MonteCarlo { samples: 100_000, seed: DEFAULT_SEED },
            composition_cap: 10_000_000,
            raw_angles: false,
        }
    }
}

impl<T: Real> EvalConfig<T> {
    pub fn with_scheme(mut self, scheme: QuadratureScheme) -> Self {
        self.scheme = scheme;
        self
    }

    pub fn with_summation(mut self, summation: Summation) -> Self {
        self.summation = summation;
        self
    }

    /// Stopping threshold for a contribution given the current partial sum.
    #[inline]
    pub(crate) fn threshold(&self, partial: T) -> T {
        (self.rel_tol * partial.abs()).max(self.abs_tol)
    }
}

/// Value of a representation with an error estimate.
///
/// `error` is a truncation bound for series, a standard error for Monte
/// Carlo, and a rule-difference estimate for deterministic quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult<T> {
    pub value: T,
    pub error: T,
    pub terms_used: usize,
    pub samples_used: usize,
}

impl<T: Real> EvalResult<T> {
    pub fn exact(value: T) -> Self {
        Self { value, error: T::zero(), terms_used: 1, samples_used: 0 }
    }
}
