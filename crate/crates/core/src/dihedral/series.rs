//! Series representations of `D_k` for the dihedral group `D₂(n)`.

use super::params::{wedge_reduce, BCoeffs, DihedralParams, PolarPoint};
use crate::config::{EvalConfig, EvalResult};
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};
use crate::special::{
    bessel_i_norm, horn_phi2_with_majorant, GegenbauerRecurrence, HornArgs,
};
use crate::summation::Accumulator;

fn reduce<T: Real>(p: PolarPoint<T>, n: usize, cfg: &EvalConfig<T>) -> Result<PolarPoint<T>> {
    if !(p.radius >= T::zero()) || !p.radius.is_finite() || !p.angle.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "point radius must be finite and nonnegative, got ({}, {})",
            p.radius, p.angle
        )));
    }
    Ok(if cfg.raw_angles { p } else { wedge_reduce(p, n) })
}

/// Gegenbauer expansion in polar coordinates,
///
/// `D = Σ_j n(j+k) q^{nj} / (nk)_{nj+1} · C_j(cos nφ) C_j(cos nθ) / C_j(1)
///      · i_{n(j+k)}(ρr)`,  `q = ρr/2`.
///
/// The truncation bound replaces `C_j(cos ·)` by `C_j(1)` and uses that
/// `i_ν(v)` decreases in `ν`; the ratio of successive majorant terms is
/// dominated by a nonincreasing sequence, giving a geometric tail.
pub fn eval_gegenbauer_series<T: Real>(
    params: &DihedralParams<T>,
    x: PolarPoint<T>,
    y: PolarPoint<T>,
    cfg: &EvalConfig<T>,
) -> Result<EvalResult<T>> {
    let n = params.n();
    let (x, y) = (reduce(x, n, cfg)?, reduce(y, n, cfg)?);
    let k = params.k();
    let nf = T::of(n);
    let nk = params.gamma_exp();
    let v = x.radius * y.radius;
    if v == T::zero() {
        return Ok(EvalResult::exact(params.series_prefactor()));
    }
    let qn = (v * lit(0.5)).powi(n as i32);

    let mut cx = GegenbauerRecurrence::new(k, (nf * x.angle).cos())?;
    let mut cy = GegenbauerRecurrence::new(k, (nf * y.angle).cos())?;
    let mut acc = Accumulator::new(cfg.summation);
    let mut inner_err = T::zero();
    // base_j = q^{nj} / (nk)_{nj+1}
    let mut base = T::one() / nk;
    let mut at_one = T::one();
    let mut small_run = 0usize;

    for j in 0..cfg.max_terms {
        let jf = T::of(j);
        let nu = nf * (jf + k);
        let bes = bessel_i_norm(nu, v);
        let weight = nu * base;
        let term = weight * cx.next().expect("infinite") * cy.next().expect("infinite") / at_one * bes.value;
        if !term.is_finite() {
            return Err(Error::NonFinite("Gegenbauer series"));
        }
        acc.add(term);
        let maj = weight * at_one * bes.value;
        inner_err = inner_err + weight * at_one * bes.tail_bound;

        // nonincreasing dominant of the majorant ratio from j to j+1
        let mut denom = T::one();
        for i in 1..=n {
            denom = denom * (nk + nf * jf + T::of(i));
        }
        let growth = ((jf + T::one() + k) / (jf + k)) * ((k + k + jf) / (jf + T::one())).max(T::one());
        let ratio = growth * qn / denom;

        let thr = cfg.threshold(acc.value());
        small_run = if maj <= thr { small_run + 1 } else { 0 };
        if small_run >= cfg.window && ratio < T::one() {
            let tail = maj * ratio / (T::one() - ratio);
            if tail <= thr {
                let prefactor = params.series_prefactor();
                return Ok(EvalResult {
                    value: prefactor * acc.value(),
                    error: prefactor * (tail + inner_err),
                    terms_used: j + 1,
                    samples_used: 0,
                });
            }
        }

        base = base * qn / denom;
        at_one = at_one * (k + k + jf) / (jf + T::one());
    }
    Err(Error::NonConvergence { series: "Gegenbauer series", terms: cfg.max_terms })
}

/// Horn-function expansion,
///
/// `D = Σ_j (k)_j² / ((2k)_j (nk)_{nj} j!) X^j Φ₂⁽ⁿ⁾(k+j, …; nk+nj; ρr b_s^{θ-φ})`
/// with `X = -4 (ρr/2)^n sin(nθ) sin(nφ)`.
///
/// Every Horn factor is bounded by `e^{ρr}` (its majorant at equal
/// parameters sums to `₁F₁(γ; γ; ρr)`), which bounds the outer tail.
pub fn eval_horn_series<T: Real>(
    params: &DihedralParams<T>,
    x: PolarPoint<T>,
    y: PolarPoint<T>,
    cfg: &EvalConfig<T>,
) -> Result<EvalResult<T>> {
    params.require_at_least(3, "Horn series")?;
    let n = params.n();
    let (x, y) = (reduce(x, n, cfg)?, reduce(y, n, cfg)?);
    let k = params.k();
    let nf = T::of(n);
    let nk = params.gamma_exp();
    let v = x.radius * y.radius;
    if v == T::zero() {
        return Ok(EvalResult::exact(params.series_prefactor()));
    }
    let b = BCoeffs::new(y.angle - x.angle, n);
    let zs: Vec<T> = b.values.iter().map(|&bs| v * bs).collect();
    let xx = lit::<T>(-4.0) * (v * lit(0.5)).powi(n as i32) * (nf * y.angle).sin() * (nf * x.angle).sin();
    let ev = v.exp();

    let mut acc = Accumulator::new(cfg.summation);
    let mut inner_err = T::zero();
    let mut coef = T::one();
    let mut terms = 0usize;
    let mut small_run = 0usize;

    for j in 0..cfg.max_terms {
        let jf = T::of(j);
        let args = HornArgs::new(vec![k + jf; n], nk + nf * jf, zs.clone())?;
        let h = horn_phi2_with_majorant(&args, cfg)?;
        terms += h.series.terms_used;
        let term = coef * h.series.value;
        if !term.is_finite() {
            return Err(Error::NonFinite("Horn series"));
        }
        acc.add(term);
        inner_err = inner_err + coef.abs() * h.series.tail_bound;
        if xx == T::zero() {
            return Ok(finish(params, acc.value(), inner_err, terms));
        }

        let mut denom = T::one();
        for i in 0..n {
            denom = denom * (nk + nf * jf + T::of(i));
        }
        let step = (k + jf) * (k + jf) / ((k + k + jf) * (jf + T::one())) * xx / denom;
        let dominant = ((k + jf) / (jf + T::one())).max(T::one()) * xx.abs() / denom;
        let maj = coef.abs() * ev;
        let thr = cfg.threshold(acc.value());
        small_run = if maj <= thr { small_run + 1 } else { 0 };
        if small_run >= cfg.window && dominant < T::one() {
            let tail = maj * dominant / (T::one() - dominant);
            if tail <= thr {
                return Ok(finish(params, acc.value(), inner_err + tail, terms));
            }
        }
        coef = coef * step;
    }
    Err(Error::NonConvergence { series: "Horn series", terms: cfg.max_terms })
}

fn finish<T: Real>(params: &DihedralParams<T>, sum: T, err: T, terms: usize) -> EvalResult<T> {
    let prefactor = params.series_prefactor();
    EvalResult { value: prefactor * sum, error: prefactor * err, terms_used: terms, samples_used: 0 }
}

/// Lowest-order Horn term: the value at `φ = 0`,
/// `Φ₂⁽ⁿ⁾(k, …, k; nk; ρr cos θ, ρr cos(θ + 2π/n), …)`.
pub fn boundary_horn<T: Real>(
    params: &DihedralParams<T>,
    rho: T,
    r: T,
    theta: T,
    cfg: &EvalConfig<T>,
) -> Result<EvalResult<T>> {
    params.require_at_least(3, "boundary Horn value")?;
    let n = params.n();
    let y = reduce(PolarPoint::new(r, theta), n, cfg)?;
    let _ = reduce(PolarPoint::new(rho, T::zero()), n, cfg)?;
    let v = rho * y.radius;
    let b = BCoeffs::new(y.angle, n);
    let args = HornArgs::new(vec![params.k(); n], params.gamma_exp(), b.values.iter().map(|&bs| v * bs).collect())?;
    let h = horn_phi2_with_majorant(&args, cfg)?;
    Ok(finish(params, h.series.value, h.series.tail_bound, h.series.terms_used))
}

/// Largest deviation of `D(0, y)` from one over a few points `y`, through
/// both series and the explicit normalization constant.
pub fn normalization_defect<T: Real>(params: &DihedralParams<T>) -> Result<T> {
    let cfg = EvalConfig::default();
    let origin = PolarPoint::new(T::zero(), T::zero());
    let mut worst = (params.series_prefactor() - T::one()).abs();
    for (r, a) in [(0.5, 0.1), (2.0, 0.7), (7.0, 2.9)] {
        let y = PolarPoint::new(lit(r), lit(a));
        worst = worst.max((eval_gegenbauer_series(params, origin, y, &cfg)?.value - T::one()).abs());
        if params.n() >= 3 {
            worst = worst.max((eval_horn_series(params, origin, y, &cfg)?.value - T::one()).abs());
        }
    }
    Ok(worst)
}
