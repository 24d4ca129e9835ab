use std::f64::consts::PI;

use rand::Rng;

use crate::config::EvalResult;
use crate::error::{invalid, Result};
use crate::scalar::{lit, Real};
use crate::simplex::rules::{gauss_jacobi_beta, tanh_sinh_beta, tanh_sinh_extent};
use crate::simplex::{monte_carlo_mean, QuadratureScheme};
use crate::special::bessel_i_norm;

/// Constant `K = (pk - 1/2)/π` making the disk integral equal to one at `w = 0`.
pub fn disk_constant<T: Real>(nu_exp: T) -> T {
    (nu_exp - lit(0.5)) / T::PI()
}

fn check_nu_exp<T: Real>(nu_exp: T) -> Result<T> {
    let nu = nu_exp - lit(0.5);
    if !(nu > T::zero()) || !nu.is_finite() {
        return Err(invalid(format!("disk integral needs pk > 1/2, got {nu_exp}")));
    }
    Ok(nu)
}

/// Trapezoid mean of `e^{v₁ cos ψ + v₂ sin ψ}` over the circle.
pub(crate) fn angular_mean<T: Real>(v1: T, v2: T) -> T {
    let m = 2 * (v1.hypot(v2).to_f64_lossy().ceil() as usize) + 24;
    let step = T::TAU() / T::of(m);
    let mut acc = T::zero();
    for j in 0..m {
        let psi = step * T::of(j);
        acc = acc + (v1 * psi.cos() + v2 * psi.sin()).exp();
    }
    acc / T::of(m)
}

/// Deterministic rule for `E_{t ~ Beta(1, ν)}[g(√t)]`; the law's density
/// `ν (1-t)^{ν-1}` is the radial disk weight after `t = |z|²`.
#[derive(Debug, Clone)]
pub(crate) struct RadialRule<T> {
    nodes: Vec<(T, T)>,
}

impl<T: Real> RadialRule<T> {
    pub(crate) fn new(nu: f64, scheme: &QuadratureScheme, coarse: bool) -> Result<Self> {
        let raw = match *scheme {
            QuadratureScheme::Product { order } => {
                gauss_jacobi_beta(1.0, nu, if coarse { order.div_ceil(2) } else { order })
            }
            QuadratureScheme::TanhSinh { level } => tanh_sinh_beta(
                1.0,
                nu,
                if coarse { level.saturating_sub(1) } else { level },
                tanh_sinh_extent(T::min_positive_value().to_f64_lossy()),
            ),
            QuadratureScheme::MonteCarlo { .. } => return Err(scheme.unsupported("radial rule must be deterministic")),
        };
        let cast = |x: f64| T::from_f64(x).unwrap_or_else(T::zero);
        Ok(Self { nodes: raw.iter().map(|n| (cast(n.x.sqrt()), cast(n.w))).collect() })
    }

    /// `E[angular_mean(√t w)] = (1/π) ν ∫_{|z|<1} e^{⟨w,z⟩} (1-|z|²)^{ν-1} dz`.
    pub(crate) fn disk_mean(&self, w1: T, w2: T) -> T {
        self.nodes.iter().fold(T::zero(), |acc, &(s, wt)| acc + wt * angular_mean(s * w1, s * w2))
    }
}

/// `K ∫_{|z|<1} e^{⟨w,z⟩} (1-|z|²)^{pk-3/2} dz` with `K = (pk-1/2)/π`.
///
/// In polar coordinates with `t = |z|²` the integral is `(π/ν)
/// E_{t ~ Beta(1,ν)}[mean_ψ e^{√t ⟨w, (cos ψ, sin ψ)⟩}]`, `ν = pk - 1/2`.
/// The angle uses the trapezoid rule; `t` uses the scheme (Monte Carlo
/// draws `t` and `ψ` jointly).
pub fn disk_integral<T: Real>(nu_exp: T, w: (T, T), scheme: &QuadratureScheme) -> Result<EvalResult<T>> {
    scheme.validate()?;
    let nu = check_nu_exp(nu_exp)?;
    let scale = disk_constant(nu_exp) * T::PI() / nu;
    let nu64 = nu.to_f64_lossy();
    let r = match *scheme {
        QuadratureScheme::MonteCarlo { samples, seed } => monte_carlo_mean(samples, seed, || (), |rng, _| {
            let t = 1.0 - rng.random::<f64>().powf(1.0 / nu64);
            let psi = 2.0 * PI * rng.random::<f64>();
            let s = T::from_f64(t.sqrt()).unwrap_or_else(T::zero);
            let (c, sn) = (T::from_f64(psi.cos()).unwrap(), T::from_f64(psi.sin()).unwrap());
            (s * (w.0 * c + w.1 * sn)).exp()
        }),
        _ => {
            let fine = RadialRule::<T>::new(nu64, scheme, false)?;
            let coarse = RadialRule::<T>::new(nu64, scheme, true)?;
            let v = fine.disk_mean(w.0, w.1);
            let e = (v - coarse.disk_mean(w.0, w.1)).abs();
            EvalResult { value: v, error: e, terms_used: 0, samples_used: fine.nodes.len() }
        }
    };
    Ok(EvalResult { value: scale * r.value, error: scale * r.error, ..r })
}

/// Relative deviation of [`disk_integral`] from `i_{pk-1/2}(|w|)`.
pub fn disk_bessel_identity<T: Real>(nu_exp: T, w: (T, T), scheme: &QuadratureScheme) -> Result<T> {
    let nu = check_nu_exp(nu_exp)?;
    let lhs = disk_integral(nu_exp, w, scheme)?.value;
    let rhs = bessel_i_norm(nu, w.0.hypot(w.1)).value;
    Ok((lhs - rhs).abs() / rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_argument_fixes_the_constant() {
        for nu_exp in [0.8, 1.0, 1.5, 2.5] {
            for scheme in [QuadratureScheme::Product { order: 8 }, QuadratureScheme::TanhSinh { level: 4 }] {
                assert!(disk_bessel_identity(nu_exp, (0.0, 0.0), &scheme).unwrap() < 1e-14);
            }
        }
    }

    #[test]
    fn plain_disk_when_weight_exponent_vanishes() {
        let d = disk_bessel_identity(1.5, (1.0, 0.0), &QuadratureScheme::Product { order: 16 }).unwrap();
        assert!(d < 1e-8, "{d}");
    }

    #[test]
    fn singular_weight_with_tanh_sinh() {
        let d = disk_bessel_identity(1.0, (1.2, -1.6), &QuadratureScheme::TanhSinh { level: 5 }).unwrap();
        assert!(d < 1e-6, "{d}");
    }

    #[test]
    fn monte_carlo_is_within_noise() {
        let r = disk_integral(1.2, (1.0, 0.5), &QuadratureScheme::MonteCarlo { samples: 200_000, seed: 4 }).unwrap();
        let want = bessel_i_norm(0.7, 1.25f64.sqrt()).value;
        assert!((r.value - want).abs() < 4.0 * r.error, "{} {want} {}", r.value, r.error);
    }

    #[test]
    fn rejects_small_exponent() {
        assert!(disk_integral(0.4, (1.0, 0.0), &QuadratureScheme::Product { order: 4 }).is_err());
    }
}
