//! Modified Bessel function of the first kind and its normalised form.

use super::gamma::{gamma, ln_gamma};
use super::{sum_decreasing_ratio, SeriesValue};
use crate::scalar::{lit, Real};

const MAX_TERMS: usize = 100_000;

/// `I_ν(v) = Σ_m (v/2)^{2m+ν} / (m! Γ(ν+m+1))` for `ν, v ≥ 0`.
///
/// The tail bound uses the monotonically decreasing term ratio
/// `(v/2)^2 / ((m+1)(ν+m+1))`.
pub fn bessel_i<T: Real>(nu: T, v: T) -> SeriesValue<T> {
    let half_v = v * lit(0.5);
    let first = if v == T::zero() {
        if nu == T::zero() { T::one() } else { T::zero() }
    } else {
        let direct = half_v.powf(nu) / gamma(nu + T::one());
        if direct.is_finite() && direct > T::zero() {
            direct
        } else {
            (nu * half_v.ln() - ln_gamma(nu + T::one())).exp()
        }
    };
    let q = half_v * half_v;
    sum_decreasing_ratio(first, |m| q / (T::of(m + 1) * (nu + T::of(m + 1))), 0, MAX_TERMS)
}

/// `i_ν(v) = Γ(ν+1) (2/v)^ν I_ν(v) = Σ_m (v/2)^{2m} / (m! (ν+1)_m)`, `ν > -1`.
pub fn bessel_i_norm<T: Real>(nu: T, v: T) -> SeriesValue<T> {
    let half_v = v * lit(0.5);
    let q = half_v * half_v;
    sum_decreasing_ratio(T::one(), |m| q / (T::of(m + 1) * (nu + T::of(m + 1))), 0, MAX_TERMS)
}
