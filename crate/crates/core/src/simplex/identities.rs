//! Dirichlet integral formula under every quadrature scheme.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{dirichlet_moment_check, QuadratureScheme};
use crate::error::Result;
use crate::suite::{SuiteCheck, SuiteOutcome};

pub const DETERMINISTIC_TOL: f64 = 1e-8;
pub const MONTE_CARLO_TOL: f64 = 1e-3;
pub const MONTE_CARLO_SAMPLES: usize = 4_000_000;

/// Ratio of each computed Dirichlet integral to its closed form, minus one.
pub fn dirichlet_suite(seed: u64) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xD1);
    let mut product = SuiteCheck::new("product rule, integer exponents >= 1", DETERMINISTIC_TOL);
    for betas in [vec![1.0, 1.0, 1.0], vec![2.0, 1.0, 1.0], vec![3.0, 2.0, 1.0, 4.0], vec![1.0, 5.0], vec![2.0, 2.0, 2.0, 2.0]] {
        let order = betas.iter().map(|&b| b as usize).sum::<usize>();
        let r = dirichlet_moment_check(&betas, &QuadratureScheme::Product { order })?;
        product.record((r - 1.0).abs());
    }

    let mut tanh = SuiteCheck::new("tanh-sinh, exponents in (0.2, 4)", DETERMINISTIC_TOL);
    let mut cases: Vec<Vec<f64>> = vec![vec![0.5, 0.5, 0.5], vec![0.3, 1.0, 2.5]];
    for dim in [2, 3, 3, 4] {
        cases.push((0..dim).map(|_| rng.random_range(0.2..4.0)).collect());
    }
    for betas in &cases {
        let r = dirichlet_moment_check(betas, &QuadratureScheme::TanhSinh { level: 5 })?;
        tanh.record((r - 1.0).abs());
    }

    let mut mc = SuiteCheck::new("Monte Carlo, exponents < 1", MONTE_CARLO_TOL);
    for (i, betas) in [vec![0.5, 0.5, 0.5], vec![0.8, 0.3, 0.6]].iter().enumerate() {
        let scheme = QuadratureScheme::MonteCarlo { samples: MONTE_CARLO_SAMPLES, seed: seed.wrapping_add(i as u64) };
        mc.record((dirichlet_moment_check(betas, &scheme)? - 1.0).abs());
    }
    Ok(SuiteOutcome { name: "dirichlet", checks: vec![product, tanh, mc] })
}
