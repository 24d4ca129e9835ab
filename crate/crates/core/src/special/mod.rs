//! Scalar special functions: Gamma family, orthogonal polynomials, Bessel
//! series, Gauss and generalised hypergeometric series, and the confluent
//! Horn function of several variables.

mod bessel;
mod gamma;
mod horn;
mod hyper;
pub mod identities;
mod orthopoly;

pub use bessel::{bessel_i, bessel_i_norm};
pub use gamma::{beta, factorial, gamma, ln_gamma, pochhammer};
pub use horn::{horn_phi2, horn_phi2_with_majorant, HornArgs, HornValue};
pub use hyper::{gauss_2f1, gauss_2f1_real, hyp_0f};
pub use orthopoly::{
    chebyshev_t, chebyshev_t_coeffs, gegenbauer, gegenbauer_at_one, gegenbauer_sequence,
    GegenbauerRecurrence,
};

use serde::Serialize;

use crate::scalar::Real;
use crate::summation::{Accumulator, Summation};

/// Truncated series with an estimate of the neglected tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue<T> {
    pub value: T,
    pub tail_bound: T,
    pub terms_used: usize,
}

/// Sums `Σ t_m` where `t_{m+1} = ratio(m) t_m` and `|ratio(m)|` decreases
/// for `m >= monotone_from`. After each term the remainder is bounded by
/// `|t_{m+1}| / (1 - |ratio(m+1)|)`.
pub(crate) fn sum_decreasing_ratio<T: Real>(
    first: T,
    ratio: impl Fn(usize) -> T,
    monotone_from: usize,
    max_terms: usize,
) -> SeriesValue<T> {
    let mut acc = Accumulator::new(Summation::Compensated);
    let mut term = first;
    let mut tail = T::infinity();
    let mut used = 0;
    for m in 0..max_terms {
        acc.add(term);
        used = m + 1;
        if term == T::zero() {
            tail = T::zero();
            break;
        }
        let next = term * ratio(m);
        if m + 1 >= monotone_from {
            let r = ratio(m + 1).abs();
            if r < T::one() {
                tail = next.abs() / (T::one() - r);
                if tail <= T::epsilon() * acc.value().abs() {
                    break;
                }
            }
        }
        term = next;
    }
    SeriesValue { value: acc.value(), tail_bound: tail, terms_used: used }
}
