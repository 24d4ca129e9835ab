//! Verification suites for the degree-grouped sums `S_N`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::params::{BCoeffs, DihedralParams};
use super::sums::{s_n_boundary, s_n_closed, s_n_direct};
use crate::config::EvalConfig;
use crate::error::Result;
use crate::special::{gamma, gauss_2f1_real, pochhammer};
use crate::suite::{relative_deviation, scaled_deviation, SuiteCheck, SuiteOutcome};
use crate::summation::Summation;

pub const S_N_TOL: f64 = 1e-10;
pub const IDGEG_TOL: f64 = 1e-12;
pub const GENERATING_TOL: f64 = 1e-10;

pub const SUITE_ORDERS: [usize; 4] = [3, 4, 5, 6];
pub const SUITE_MULTIPLICITIES: [f64; 5] = [0.3, 0.7, 1.0, 1.5, 2.5];
pub const SUITE_MAX_DEGREE: usize = 10;
pub const SUITE_ANGLE_PAIRS: usize = 20;

fn open_wedge(rng: &mut ChaCha8Rng, n: usize) -> f64 {
    let w = PI / n as f64;
    rng.random_range(1e-3 * w..(1.0 - 1e-3) * w)
}

/// `S_N Γ(nk+N) / 2^N`, the degree-`N` coefficient with the Gamma growth
/// removed; of order one for every `N`.
fn unscaled(v: f64, par: &DihedralParams<f64>, big_n: usize) -> f64 {
    v * gamma(par.gamma_exp() + big_n as f64) / 2f64.powi(big_n as i32)
}

/// Direct sum against the composition closed form over the full grid.
pub fn s_n_suite(seed: u64) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = EvalConfig::<f64>::default();
    let mut scaled = SuiteCheck::new("S_N direct vs closed, max(1,|S_N|)-scaled", S_N_TOL);
    let mut coeff = SuiteCheck::new("S_N Γ(nk+N)/2^N direct vs closed", S_N_TOL);
    for &n in &SUITE_ORDERS {
        for &k in &SUITE_MULTIPLICITIES {
            let par = DihedralParams::new(n, k)?;
            for _ in 0..SUITE_ANGLE_PAIRS {
                let (phi, theta) = (open_wedge(&mut rng, n), open_wedge(&mut rng, n));
                for big_n in 0..=SUITE_MAX_DEGREE {
                    let d = s_n_direct(&par, phi, theta, big_n)?;
                    let c = s_n_closed(&par, phi, theta, big_n, &cfg)?;
                    scaled.record(scaled_deviation(c, d));
                    coeff.record(scaled_deviation(unscaled(c, &par, big_n), unscaled(d, &par, big_n)));
                }
            }
        }
    }
    Ok(SuiteOutcome { name: "sN", checks: vec![scaled, coeff] })
}

/// Closed form at `φ = 0` against the independent convolution over
/// `|j| = N` of `∏ (k)_{j_s} b_s^{j_s} / j_s!`.
pub fn idgeg_suite(seed: u64) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1D6E);
    let cfg = EvalConfig::<f64>::default();
    let mut scaled = SuiteCheck::new("S_N(φ=0) closed vs boundary convolution", IDGEG_TOL);
    let mut coeff = SuiteCheck::new("same, Γ(nk+N)/2^N-normalized", IDGEG_TOL);
    for &n in &SUITE_ORDERS {
        for &k in &SUITE_MULTIPLICITIES {
            let par = DihedralParams::new(n, k)?;
            for _ in 0..SUITE_ANGLE_PAIRS {
                let theta = open_wedge(&mut rng, n);
                for big_n in 0..=SUITE_MAX_DEGREE {
                    let c = s_n_closed(&par, 0.0, theta, big_n, &cfg)?;
                    let b = s_n_boundary(&par, theta, big_n, Summation::Compensated)?;
                    scaled.record(scaled_deviation(c, b));
                    coeff.record(scaled_deviation(unscaled(c, &par, big_n), unscaled(b, &par, big_n)));
                }
            }
        }
    }
    Ok(SuiteOutcome { name: "idgeg", checks: vec![scaled, coeff] })
}

/// `Σ_N S_N Γ(nk+N) (z/2)^N`, summed until the terms are negligible.
pub fn generating_series(par: &DihedralParams<f64>, phi: f64, theta: f64, z: f64) -> Result<f64> {
    let mut sum = 0.0;
    let mut small = 0;
    for big_n in 0..400 {
        let t = unscaled(s_n_direct(par, phi, theta, big_n)?, par, big_n) * z.powi(big_n as i32);
        sum += t;
        small = if t.abs() <= 1e-17 * sum.abs() { small + 1 } else { 0 };
        if small >= 2 * par.n() {
            break;
        }
    }
    Ok(sum)
}

/// Closed form of the generating function with the denominator
/// `(1+√(1-z²))^n + (1-√(1-z²))^n - 2zⁿ cos(n(θ-φ))` used without any
/// exponent inside the `2F1` argument.
pub fn generating_closed_form(par: &DihedralParams<f64>, phi: f64, theta: f64, z: f64) -> Result<f64> {
    let (n, k) = (par.n() as i32, par.k());
    let nf = n as f64;
    let s = (1.0 - z * z).sqrt();
    let den = (1.0 + s).powi(n) + (1.0 - s).powi(n) - 2.0 * z.powi(n) * (nf * (theta - phi)).cos();
    let arg = -4.0 * z.powi(n) * (nf * theta).sin() * (nf * phi).sin() / den;
    let f = gauss_2f1_real(k, k, 2.0 * k, arg)?.value;
    Ok(2f64.powf(nf * k) / den.powf(k) * f)
}

/// Product form `Σ_j (k)_j² / ((2k)_j j!) (-zⁿ sin nθ sin nφ)^j / 2^{(n-2)j}
/// ∏_s (1 - b_s z)^{-(k+j)}`.
pub fn generating_product_form(par: &DihedralParams<f64>, phi: f64, theta: f64, z: f64) -> f64 {
    let (n, k) = (par.n(), par.k());
    let nf = n as f64;
    let b = BCoeffs::new(theta - phi, n);
    let prod: f64 = b.values.iter().map(|&bs| 1.0 - bs * z).product();
    let x = -z.powi(n as i32) * (nf * theta).sin() * (nf * phi).sin() / 2f64.powi(n as i32 - 2) / prod;
    let mut sum = 0.0;
    for j in 0..200 {
        let pk = pochhammer(k, j);
        let t = pk * pk / (pochhammer(2.0 * k, j) * pochhammer(1.0, j)) * x.powi(j as i32);
        sum += t;
        if t.abs() <= 1e-18 * sum.abs() {
            break;
        }
    }
    sum * prod.powf(-k)
}

/// Generating function of `S_N` against its two closed forms.
pub fn generating_function_suite(seed: u64) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6E4E);
    let mut closed = SuiteCheck::new("Σ S_N Γ(nk+N)(z/2)^N vs Poisson closed form", GENERATING_TOL);
    let mut product = SuiteCheck::new("Σ S_N Γ(nk+N)(z/2)^N vs product form", GENERATING_TOL);
    for &n in &SUITE_ORDERS {
        for &k in &SUITE_MULTIPLICITIES {
            let par = DihedralParams::new(n, k)?;
            for _ in 0..4 {
                let (phi, theta) = (open_wedge(&mut rng, n), open_wedge(&mut rng, n));
                let z = rng.random_range(-0.5..0.5);
                let lhs = generating_series(&par, phi, theta, z)?;
                closed.record(relative_deviation(generating_closed_form(&par, phi, theta, z)?, lhs));
                product.record(relative_deviation(generating_product_form(&par, phi, theta, z), lhs));
            }
        }
    }
    Ok(SuiteOutcome { name: "poisson", checks: vec![closed, product] })
}
