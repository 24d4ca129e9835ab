//! Integration over the standard simplex against Dirichlet weights, and the
//! simplex representation of `D_k` with its `₀F_{n-1}` kernel.
//!
//! Points are stored as `(u₁, …, u_{n-1}, u₀)` with `u₀ = 1 - Σ u_s` last.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub mod identities;
mod integrate;
mod representation;
pub mod rules;

pub use integrate::{dirichlet_sample, integrate_dirichlet, MC_CHUNK};
pub(crate) use integrate::monte_carlo_mean;
pub use representation::{dirichlet_moment_check, eval_simplex_integral, simplex_integrand};

/// Largest number of integrand evaluations a deterministic rule may use.
pub const MAX_RULE_NODES: u64 = 50_000_000;

/// How an expectation over a Dirichlet law is computed.
///
/// * `MonteCarlo`: i.i.d. Dirichlet variates from normalized Gamma draws.
///   The generator is ChaCha8 seeded with `seed`; sample block `c` (of
///   [`MC_CHUNK`] samples) uses stream `c`, so results do not depend on the
///   thread count. The error is the standard error of the mean.
/// * `Product`: collapsed (stick-breaking) Gauss–Jacobi product rule with
///   `order` points per coordinate. The Dirichlet weight is built into the
///   rule. The error is the difference to the rule with half the order.
/// * `TanhSinh`: iterated tanh-sinh with step `2^-level`, for integrands
///   with endpoint singularities. The error is the difference to the rule
///   at `level - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum QuadratureScheme {
    MonteCarlo { samples: usize, seed: u64 },
    Product { order: usize },
    TanhSinh { level: u32 },
}

impl QuadratureScheme {
    pub fn validate(&self) -> Result<()> {
        match *self {
            QuadratureScheme::MonteCarlo { samples: 0, .. } => Err(invalid("Monte Carlo needs at least one sample")),
            QuadratureScheme::Product { order: 0 } => Err(invalid("product rule order must be at least 1")),
            QuadratureScheme::TanhSinh { level } if level > 12 => {
                Err(invalid(format!("tanh-sinh level {level} is above the supported maximum of 12")))
            }
            _ => Ok(()),
        }
    }

    pub fn is_monte_carlo(&self) -> bool {
        matches!(self, QuadratureScheme::MonteCarlo { .. })
    }

    pub(crate) fn unsupported(&self, why: &str) -> Error {
        Error::UnsupportedScheme(format!("{self:?}: {why}"))
    }
}

/// Point of the standard simplex `Σ_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimplexPoint {
    coords: Vec<f64>,
}

impl SimplexPoint {
    const SLACK: f64 = 1e-14;

    /// From `(u₁, …, u_{n-1})`; `u₀` is the remainder.
    pub fn new(free: &[f64]) -> Result<Self> {
        let rest = 1.0 - free.iter().sum::<f64>();
        let mut coords = free.to_vec();
        coords.push(if rest < 0.0 && rest > -Self::SLACK { 0.0 } else { rest });
        Self::from_full(coords)
    }

    /// From all `n` coordinates `(u₁, …, u_{n-1}, u₀)`.
    pub fn from_full(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(invalid("simplex point needs at least one coordinate"));
        }
        if coords.iter().any(|&u| !(u >= 0.0)) {
            return Err(invalid(format!("simplex coordinates must be nonnegative, got {coords:?}")));
        }
        let total: f64 = coords.iter().sum();
        if (total - 1.0).abs() > Self::SLACK * coords.len() as f64 {
            return Err(invalid(format!("simplex coordinates sum to {total}, not 1")));
        }
        Ok(Self { coords })
    }

    /// Builds a point without validation from coordinates produced by a rule
    /// or a sampler.
    pub(crate) fn from_raw(coords: &[f64]) -> Self {
        Self { coords: coords.to_vec() }
    }

    pub fn u0(&self) -> f64 {
        *self.coords.last().expect("nonempty")
    }

    /// `(u₁, …, u_{n-1})`.
    pub fn free(&self) -> &[f64] {
        &self.coords[..self.coords.len() - 1]
    }

    /// `(u₁, …, u_{n-1}, u₀)`.
    pub fn full(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_validation() {
        let p = SimplexPoint::new(&[0.2, 0.3]).unwrap();
        assert!((p.u0() - 0.5).abs() < 1e-16);
        assert_eq!(p.dim(), 3);
        assert!(SimplexPoint::new(&[0.7, 0.4]).is_err());
        assert!(SimplexPoint::from_full(vec![0.5, -0.1, 0.6]).is_err());
        assert_eq!(SimplexPoint::new(&[]).unwrap().u0(), 1.0);
    }

    #[test]
    fn scheme_validation() {
        assert!(QuadratureScheme::MonteCarlo { samples: 0, seed: 1 }.validate().is_err());
        assert!(QuadratureScheme::Product { order: 0 }.validate().is_err());
        assert!(QuadratureScheme::TanhSinh { level: 20 }.validate().is_err());
        assert!(QuadratureScheme::TanhSinh { level: 4 }.validate().is_ok());
    }

    #[test]
    fn scheme_serde_round_trip() {
        let s = QuadratureScheme::MonteCarlo { samples: 10, seed: 3 };
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"kind":"monte-carlo","samples":10,"seed":3}"#);
        assert_eq!(serde_json::from_str::<QuadratureScheme>(&j).unwrap(), s);
    }
}
