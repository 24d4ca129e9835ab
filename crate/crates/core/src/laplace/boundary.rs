use super::EvenDihedralParams;
use crate::config::EvalResult;
use crate::dihedral::PolarPoint;
use crate::error::{invalid, Result};
use crate::scalar::{lit, Real};
use crate::simplex::{integrate_dirichlet, QuadratureScheme};
use crate::special::bessel_i_norm;

/// `D_k(ρ, y)` for `x = (ρ, 0)` on the wedge boundary, as the
/// Dirichlet(k, …, k) mean over `Σ_p` of
///
/// `i_{pk-1/2}((ρ/√2) √((y₁²+y₂²) + (y₁²-y₂²) S_re + 2y₁y₂ S_im))`.
pub fn eval_boundary_bessel<T: Real>(
    params: &EvenDihedralParams<T>,
    rho: T,
    y: PolarPoint<T>,
    scheme: &QuadratureScheme,
) -> Result<EvalResult<T>> {
    if !(rho >= T::zero()) || !rho.is_finite() || !(y.radius >= T::zero()) || !y.radius.is_finite() {
        return Err(invalid(format!("radii must be finite and nonnegative, got rho = {rho}, r = {}", y.radius)));
    }
    let nu = params.nu();
    let (y1, y2) = y.to_cartesian();
    let (sum, diff, cross) = (y1 * y1 + y2 * y2, y1 * y1 - y2 * y2, lit::<T>(2.0) * y1 * y2);
    let scale = rho * rho * lit(0.5);
    let r = integrate_dirichlet(&params.alphas(), scheme, |u| {
        let (re, im) = params.moment(u);
        let q = (sum + diff * re + cross * im).max(T::zero());
        bessel_i_norm(nu, (scale * q).sqrt()).value
    })?;
    let c = params.dihedral().series_prefactor();
    Ok(EvalResult { value: c * r.value, error: c * r.error, ..r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_one_is_a_single_bessel() {
        let k = 0.8;
        let par = EvenDihedralParams::new(1, k).unwrap();
        let y = PolarPoint::new(1.7, 0.4);
        let r = eval_boundary_bessel(&par, 1.3, y, &QuadratureScheme::Product { order: 3 }).unwrap();
        let want = bessel_i_norm(k - 0.5, 1.3 * 1.7 * 0.4f64.cos()).value;
        assert!((r.value - want).abs() < 1e-15 * want);
    }

    #[test]
    fn origin_is_one() {
        let par = EvenDihedralParams::new(3, 0.6_f64).unwrap();
        let r = eval_boundary_bessel(&par, 0.0, PolarPoint::new(2.0, 0.1), &QuadratureScheme::Product { order: 5 })
            .unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
    }
}
