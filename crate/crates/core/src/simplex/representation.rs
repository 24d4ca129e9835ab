use super::{integrate_dirichlet, QuadratureScheme};
use crate::config::EvalResult;
use crate::dihedral::{BCoeffs, DihedralParams, PolarPoint};
use crate::error::{invalid, Result};
use crate::scalar::{lit, Real};
use crate::special::ln_gamma;

/// Smooth factor of the simplex representation at `u = (u₁, …, u_{n-1}, u₀)`:
///
/// `exp(ρr Σ_s u_s b_s^{θ-φ}) ₀F_{n-1}(2k, k, …, k; X u₀u₁…u_{n-1})`,
/// `X = -4 (ρr/2)^n sin(nθ) sin(nφ)`, with `u₀` paired with `b_n = cos(θ-φ)`.
/// Its mean under Dirichlet(k, …, k) is `D_k(x, y)`.
pub fn simplex_integrand<T: Real>(
    params: &DihedralParams<T>,
    x: PolarPoint<T>,
    y: PolarPoint<T>,
) -> impl Fn(&[f64]) -> T + Sync + Send {
    let n = params.n();
    let k = params.k();
    let nf = T::of(n);
    let v = x.radius * y.radius;
    let b: Vec<T> = BCoeffs::new(y.angle - x.angle, n).values.iter().map(|&bs| v * bs).collect();
    let xx = lit::<T>(-4.0) * (v * lit(0.5)).powi(n as i32) * (nf * y.angle).sin() * (nf * x.angle).sin();
    move |u: &[f64]| {
        let mut lin = T::zero();
        let mut prod = xx;
        for (&us, &bs) in u.iter().zip(&b) {
            let us = T::from_f64(us).unwrap_or_else(T::zero);
            lin = lin + us * bs;
            prod = prod * us;
        }
        lin.exp() * hyp_0f_equal(k, n, prod)
    }
}

/// `₀F_{n-1}(2k, k, …, k; z)` with `n - 2` copies of `k`.
fn hyp_0f_equal<T: Real>(k: T, n: usize, z: T) -> T {
    if z == T::zero() {
        return T::one();
    }
    let mut sum = T::one();
    let mut term = T::one();
    for j in 0..500 {
        let jf = T::of(j);
        term = term * z / ((jf + T::one()) * (k + k + jf) * (k + jf).powi(n as i32 - 2));
        sum = sum + term;
        if term.abs() <= T::epsilon() * sum.abs() {
            break;
        }
    }
    sum
}

/// `D_k(x, y)` as the Dirichlet(k, …, k) mean of [`simplex_integrand`].
///
/// Monte Carlo reports a standard error, deterministic rules the change
/// from the next coarser rule.
pub fn eval_simplex_integral<T: Real>(
    params: &DihedralParams<T>,
    x: PolarPoint<T>,
    y: PolarPoint<T>,
    scheme: &QuadratureScheme,
) -> Result<EvalResult<T>> {
    params.require_at_least(3, "simplex representation")?;
    for p in [x, y] {
        if !(p.radius >= T::zero()) || !p.radius.is_finite() || !p.angle.is_finite() {
            return Err(invalid(format!("point radius must be finite and nonnegative, got ({}, {})", p.radius, p.angle)));
        }
    }
    let alphas = vec![params.k().to_f64_lossy(); params.n()];
    let f = simplex_integrand(params, x, y);
    let r = integrate_dirichlet(&alphas, scheme, f)?;
    let c = params.series_prefactor();
    Ok(EvalResult { value: c * r.value, error: c * r.error, ..r })
}

/// `∫_{Σ_n} ∏ u_s^{β_s - 1} du` computed by `scheme`, divided by
/// `Γ(β₁)…Γ(β_n) / Γ(Σβ)`.
///
/// Monte Carlo samples Dirichlet(β/2) and averages `∏ u^{β/2}`; the
/// deterministic rules integrate `∏ u^{β-1}` against the uniform law, which
/// for the product rule requires every `β_s ≥ 1`.
pub fn dirichlet_moment_check(betas: &[f64], scheme: &QuadratureScheme) -> Result<f64> {
    if betas.len() < 2 {
        return Err(invalid("Dirichlet integral needs at least two exponents"));
    }
    if let Some(b) = betas.iter().find(|&&b| !(b > 0.0) || !b.is_finite()) {
        return Err(invalid(format!("Dirichlet exponents must be positive, got {b}")));
    }
    let ln_dir = |a: &[f64]| a.iter().map(|&x| ln_gamma(x)).sum::<f64>() - ln_gamma(a.iter().sum::<f64>());
    let closed = ln_dir(betas);
    let (alphas, powers): (Vec<f64>, Vec<f64>) = match scheme {
        QuadratureScheme::MonteCarlo { .. } => betas.iter().map(|&b| (0.5 * b, 0.5 * b)).unzip(),
        QuadratureScheme::Product { .. } if betas.iter().any(|&b| b < 1.0) => {
            return Err(scheme.unsupported("weight exponent below 1 is singular on the simplex faces; use tanh-sinh or Monte Carlo"));
        }
        _ => betas.iter().map(|&b| (1.0, b - 1.0)).unzip(),
    };
    let f = |u: &[f64]| u.iter().zip(&powers).map(|(&us, &e)| if e == 0.0 { 1.0 } else { us.powf(e) }).product::<f64>();
    let r: EvalResult<f64> = integrate_dirichlet(&alphas, scheme, f)?;
    Ok(r.value * (ln_dir(&alphas) - closed).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::hyp_0f;

    #[test]
    fn origin_is_one() {
        let par = DihedralParams::new(4, 0.6_f64).unwrap();
        let r = eval_simplex_integral(
            &par,
            PolarPoint::new(0.0, 0.0),
            PolarPoint::new(2.0, 0.3),
            &QuadratureScheme::MonteCarlo { samples: 1000, seed: 1 },
        )
        .unwrap();
        assert!((r.value - 1.0).abs() < 1e-14 && r.error < 1e-14);
    }

    #[test]
    fn kernel_matches_generic_series() {
        for (k, n, z) in [(0.7_f64, 3, -2.0_f64), (1.5, 5, 0.3), (2.0, 4, -0.01)] {
            let mut ps = vec![2.0 * k];
            ps.extend(std::iter::repeat_n(k, n - 2));
            let want = hyp_0f(&ps, z).unwrap().value;
            assert!((hyp_0f_equal(k, n, z) - want).abs() < 1e-15 * want.abs());
        }
    }

    #[test]
    fn moment_check_examples() {
        let prod = QuadratureScheme::Product { order: 4 };
        assert!((dirichlet_moment_check(&[1.0, 1.0, 1.0], &prod).unwrap() - 1.0).abs() < 1e-13);
        assert!((dirichlet_moment_check(&[2.0, 1.0, 1.0], &prod).unwrap() - 1.0).abs() < 1e-13);
        assert!(dirichlet_moment_check(&[0.5, 1.0, 1.0], &prod).is_err());
        let ts = QuadratureScheme::TanhSinh { level: 5 };
        assert!((dirichlet_moment_check(&[0.5, 0.5, 0.5], &ts).unwrap() - 1.0).abs() < 1e-8);
    }
}
