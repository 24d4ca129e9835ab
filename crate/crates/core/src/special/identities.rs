//! Verification suites for the one-variable identities behind the Horn
//! series: duplication, alternating Pochhammer sum, Gegenbauer Poisson
//! kernel, Chebyshev factorization and the quadratic `2F1` closed form.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    chebyshev_t, chebyshev_t_coeffs, factorial, gauss_2f1_real, gegenbauer_at_one,
    gegenbauer_sequence, pochhammer,
};
use crate::error::Result;
use crate::suite::{relative_deviation, scaled_deviation, SuiteCheck, SuiteOutcome};
use crate::summation::{sum_with, Summation};

pub const DUPLICATION_TOL: f64 = 1e-12;
pub const ALT_SUM_TOL: f64 = 1e-12;
pub const POISSON_TOL: f64 = 1e-8;
pub const FACTORIZATION_TOL: f64 = 1e-12;
pub const GAUSS_CLOSED_TOL: f64 = 1e-10;

/// `(x)_{2l} = 4^l (x/2)_l ((1+x)/2)_l` for `x ∈ (0, 10]`, `l ≤ 20`.
pub fn duplication_suite(seed: u64) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut check = SuiteCheck::new("(x)_2l vs 4^l (x/2)_l ((1+x)/2)_l", DUPLICATION_TOL);
    let mut xs: Vec<f64> = (1..=40).map(|i| i as f64 * 0.25).collect();
    xs.extend((0..40).map(|_| rng.random_range(1e-3..=10.0)));
    for &x in &xs {
        for l in 0..=20 {
            let lhs = pochhammer(x, 2 * l);
            let rhs = 4f64.powi(l as i32) * pochhammer(x / 2.0, l) * pochhammer((1.0 + x) / 2.0, l);
            check.record(relative_deviation(lhs, rhs));
        }
    }
    Ok(SuiteOutcome { name: "duplication", checks: vec![check] })
}

/// Left side of the alternating Pochhammer identity.
pub fn alternating_pochhammer_sum(k: f64, m: usize, mode: Summation) -> f64 {
    let terms = (0..=2 * m).map(|j| {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sign * pochhammer(k, j) * pochhammer(k, 2 * m - j) / (factorial::<f64>(j) * factorial::<f64>(2 * m - j))
    });
    sum_with(mode, terms)
}

/// `Σ_{j=0}^{2m} (-1)^j (k)_j (k)_{2m-j} / (j!(2m-j)!) = (k)_m / m!`.
pub fn alternating_sum_suite() -> Result<SuiteOutcome> {
    let mut check = SuiteCheck::new("alternating sum vs (k)_m/m!", ALT_SUM_TOL);
    for &k in &[0.3, 1.0, 2.5] {
        for m in 0..=15 {
            let lhs = alternating_pochhammer_sum(k, m, Summation::DoubleWord);
            let rhs = pochhammer(k, m) / factorial::<f64>(m);
            check.record(relative_deviation(lhs, rhs));
        }
    }
    Ok(SuiteOutcome { name: "altsum", checks: vec![check] })
}

/// Truncated `Σ_j C_j(cos a) C_j(cos b) / C_j(1) t^j`, with the cut-off
/// chosen from the majorant `Σ C_j(1) |t|^j`.
pub fn poisson_series(k: f64, a: f64, b: f64, t: f64) -> Result<f64> {
    assert!(t.abs() < 1.0);
    let mut jmax = 16;
    loop {
        // tail bound past jmax: C_{j+1}(1)|t|^{j+1} / (1 - max(ratio, |t|))
        let next = gegenbauer_at_one(jmax + 1, k) * t.abs().powi(jmax as i32 + 1);
        let ratio = ((2.0 * k + jmax as f64 + 1.0) / (jmax as f64 + 2.0) * t.abs()).max(t.abs());
        if ratio < 1.0 && next / (1.0 - ratio) < 1e-17 {
            break;
        }
        jmax *= 2;
    }
    let ca = gegenbauer_sequence(jmax, k, a.cos())?;
    let cb = gegenbauer_sequence(jmax, k, b.cos())?;
    let terms = (0..=jmax).map(|j| ca[j] * cb[j] / gegenbauer_at_one(j, k) * t.powi(j as i32));
    Ok(sum_with(Summation::Compensated, terms))
}

/// Closed form of the Gegenbauer Poisson kernel.
pub fn poisson_closed_form(k: f64, a: f64, b: f64, t: f64) -> Result<f64> {
    let d = 1.0 - 2.0 * t * (a - b).cos() + t * t;
    let z = -4.0 * t * a.sin() * b.sin() / d;
    Ok(d.powf(-k) * gauss_2f1_real(k, k, 2.0 * k, z)?.value)
}

pub fn poisson_suite(seed: u64) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut check = SuiteCheck::new("Gegenbauer Poisson kernel", POISSON_TOL);
    for &k in &[0.3, 1.0, 2.5] {
        for &t in &[-0.6, -0.3, 0.1, 0.35, 0.6] {
            for _ in 0..8 {
                let a = rng.random_range(0.0..PI);
                let b = rng.random_range(0.0..PI);
                let lhs = poisson_series(k, a, b, t)?;
                let rhs = poisson_closed_form(k, a, b, t)?;
                check.record(scaled_deviation(lhs, rhs));
            }
        }
    }
    Ok(SuiteOutcome { name: "poisson", checks: vec![check] })
}

/// Coefficients (lowest first) of `2 z^n T_n(1/z) - 2 z^n cos ξ`.
pub fn chebyshev_side(n: usize, xi: f64) -> Vec<f64> {
    let t = chebyshev_t_coeffs::<f64>(n);
    let mut out: Vec<f64> = (0..=n).map(|d| 2.0 * t[n - d]).collect();
    out[n] -= 2.0 * xi.cos();
    out
}

/// Coefficients of `2^n ∏_{s=1}^n (1 - cos(ξ/n + 2πs/n) z)`.
pub fn product_side(n: usize, xi: f64) -> Vec<f64> {
    let mut poly = vec![2f64.powi(n as i32)];
    for s in 1..=n {
        let b = (xi / n as f64 + 2.0 * PI * s as f64 / n as f64).cos();
        let mut next = vec![0.0; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= b * c;
        }
        poly = next;
    }
    poly
}

pub fn factorization_suite(seed: u64) -> Result<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = SuiteCheck::new("2z^nT_n(1/z)-2z^n cos xi vs product", FACTORIZATION_TOL);
    let mut radical = SuiteCheck::new("(1+sqrt(1-z^2))^n+(1-..)^n vs 2z^nT_n(1/z)", FACTORIZATION_TOL);
    for n in 3..=8 {
        for i in 0..12 {
            let xi = if i < 2 { i as f64 * PI } else { rng.random_range(0.0..=PI) };
            let lhs = chebyshev_side(n, xi);
            let rhs = product_side(n, xi);
            for (l, r) in lhs.iter().zip(&rhs) {
                coeffs.record(scaled_deviation(*l, *r));
            }
        }
        for _ in 0..12 {
            let z: f64 = rng.random_range(0.05..1.0);
            let root = (1.0 - z * z).sqrt();
            let lhs = (1.0 + root).powi(n as i32) + (1.0 - root).powi(n as i32);
            let rhs = 2.0 * z.powi(n as i32) * chebyshev_t(n, 1.0 / z);
            radical.record(relative_deviation(lhs, rhs));
        }
    }
    Ok(SuiteOutcome { name: "factorization", checks: vec![coeffs, radical] })
}

/// `2F1(s/2, (s+1)/2; s+1; z) (1 + sqrt(1-z))^s = 2^s` on the grid
/// `s = n(k+j)`.
pub fn gauss_closed_form_suite() -> Result<SuiteOutcome> {
    let mut check = SuiteCheck::new("2F1(s/2,(s+1)/2;s+1;z) closed form", GAUSS_CLOSED_TOL);
    for n in 3..=6 {
        for &k in &[0.3, 0.7, 1.0, 1.5, 2.5] {
            for j in 0..=3 {
                let s = n as f64 * (k + j as f64);
                for i in 0..=18 {
                    let z = -0.9 + 0.1 * i as f64;
                    let f = gauss_2f1_real(s / 2.0, (s + 1.0) / 2.0, s + 1.0, z)?.value;
                    let lhs = f * (1.0 + (1.0 - z).sqrt()).powf(s);
                    check.record(relative_deviation(lhs, 2f64.powf(s)));
                }
            }
        }
    }
    Ok(SuiteOutcome { name: "2f1closed", checks: vec![check] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass() {
        for outcome in [
            duplication_suite(7).unwrap(),
            alternating_sum_suite().unwrap(),
            poisson_suite(7).unwrap(),
            factorization_suite(7).unwrap(),
            gauss_closed_form_suite().unwrap(),
        ] {
            assert!(outcome.passed(), "{outcome}");
        }
    }

    #[test]
    fn factorization_small_case_by_hand() {
        // n = 2: 4 - 2z^2 - 2z^2 cos xi = 4 - 4 cos^2(xi/2) z^2
        let xi = 0.9_f64;
        let lhs = chebyshev_side(2, xi);
        let rhs = product_side(2, xi);
        let expected = [4.0, 0.0, -4.0 * (xi / 2.0).cos().powi(2)];
        for i in 0..3 {
            assert!((lhs[i] - expected[i]).abs() < 1e-14);
            assert!((rhs[i] - expected[i]).abs() < 1e-14);
        }
    }
}
