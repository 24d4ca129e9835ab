//! Gauss `2F1` and generalised `0F_q` series.

use super::{sum_decreasing_ratio, SeriesValue};
use crate::error::{invalid, Error, Result};
use crate::scalar::{lit, Real};
use crate::summation::{Accumulator, Summation};

const MAX_TERMS: usize = 200_000;
const WINDOW: usize = 5;

/// Gauss series `Σ (a)_m (b)_m / ((c)_m m!) z^m` for `|z| < 1`.
///
/// Converged when `WINDOW` consecutive terms fall below `eps |sum|` and the
/// geometric remainder estimate `|t_{m+1}| / (1 - max(|r_{m+1}|, |z|))`
/// does as well.
pub fn gauss_2f1<T: Real>(a: T, b: T, c: T, z: T) -> Result<SeriesValue<T>> {
    if c.is_nonpositive_integer() {
        return Err(invalid(format!("2F1 lower parameter c = {c} is a nonpositive integer")));
    }
    if !(z.abs() < T::one()) {
        return Err(Error::NonConvergence { series: "2F1 (|z| >= 1)", terms: 0 });
    }
    let ratio = |m: usize| {
        let mf = T::of(m);
        (a + mf) * (b + mf) / ((c + mf) * (mf + T::one())) * z
    };
    let mut acc = Accumulator::new(Summation::Compensated);
    let mut term = T::one();
    let mut small_run = 0;
    for m in 0..MAX_TERMS {
        acc.add(term);
        if term == T::zero() {
            return Ok(SeriesValue { value: acc.value(), tail_bound: T::zero(), terms_used: m + 1 });
        }
        let thr = T::epsilon() * acc.value().abs();
        small_run = if term.abs() <= thr { small_run + 1 } else { 0 };
        let next = term * ratio(m);
        let rho = ratio(m + 1).abs().max(z.abs());
        if small_run >= WINDOW && rho < T::one() {
            let tail = next.abs() / (T::one() - rho);
            if tail <= thr {
                return Ok(SeriesValue { value: acc.value(), tail_bound: tail, terms_used: m + 1 });
            }
        }
        term = next;
    }
    Err(Error::NonConvergence { series: "2F1", terms: MAX_TERMS })
}

/// `2F1(a, b; c; z)` on the whole real cut plane `z < 1`.
///
/// For `z < -1/2` the Pfaff transformation
/// `2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))` moves the argument
/// into `(1/3, 1)`.
pub fn gauss_2f1_real<T: Real>(a: T, b: T, c: T, z: T) -> Result<SeriesValue<T>> {
    if !(z < T::one()) {
        return Err(Error::NonConvergence { series: "2F1 (z >= 1)", terms: 0 });
    }
    if z >= lit(-0.5) {
        return gauss_2f1(a, b, c, z);
    }
    let w = z / (z - T::one());
    let s = gauss_2f1(a, c - b, c, w)?;
    let scale = (T::one() - z).powf(-a);
    Ok(SeriesValue {
        value: scale * s.value,
        tail_bound: scale * s.tail_bound,
        terms_used: s.terms_used,
    })
}

/// `0F_q(a_1..a_q; z) = Σ_j z^j / ((a_1)_j ... (a_q)_j j!)`; entire in `z`.
pub fn hyp_0f<T: Real>(params: &[T], z: T) -> Result<SeriesValue<T>> {
    if let Some(bad) = params.iter().find(|a| a.is_nonpositive_integer()) {
        return Err(invalid(format!("0F parameter {bad} is a nonpositive integer")));
    }
    // |ratio| decreases once every a_i + j is positive
    let monotone_from = params
        .iter()
        .map(|&a| if a > T::zero() { 0 } else { (-a).ceil().to_usize().unwrap_or(0) + 1 })
        .max()
        .unwrap_or(0);
    Ok(sum_decreasing_ratio(
        T::one(),
        |j| {
            let jf = T::of(j);
            let denom = params.iter().fold(jf + T::one(), |acc, &a| acc * (a + jf));
            z / denom
        },
        monotone_from,
        MAX_TERMS,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_leading_term() {
        assert_eq!(gauss_2f1(0.3_f64, 1.2, 2.5, 0.0).unwrap().value, 1.0);
    }

    #[test]
    fn gauss_log_closed_form() {
        let s = gauss_2f1(1.0_f64, 1.0, 2.0, 0.5).unwrap();
        let expected = -(0.5_f64.ln()) / 0.5;
        assert!((s.value - expected).abs() < 1e-14, "{} vs {}", s.value, expected);
        assert!((expected - 1.386_294_361_1).abs() < 1e-10);
    }

    #[test]
    fn gauss_quadratic_closed_form() {
        let (sp, z) = (3.0_f64, 0.5);
        let s = gauss_2f1(sp / 2.0, (sp + 1.0) / 2.0, sp + 1.0, z).unwrap();
        let expected = 2f64.powf(sp) / (1.0 + (1.0 - z).sqrt()).powf(sp);
        assert!((s.value - expected).abs() < 1e-14 * expected);
    }

    #[test]
    fn gauss_rejects_outside_disk() {
        assert!(matches!(gauss_2f1(1.0_f64, 1.0, 2.0, 1.0), Err(Error::NonConvergence { .. })));
        assert!(gauss_2f1(1.0_f64, 1.0, -2.0, 0.2).is_err());
    }

    #[test]
    fn gauss_terminating_polynomial() {
        // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
        let (b, c, z) = (1.5_f64, 2.5, 0.3);
        let expected = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
        assert!((gauss_2f1(-2.0, b, c, z).unwrap().value - expected).abs() < 1e-15);
    }

    #[test]
    fn pfaff_continuation_matches_log() {
        // 2F1(1,1;2;z) = -ln(1-z)/z also for z < -1
        for &z in &[-0.7_f64, -3.0, -15.0] {
            let s = gauss_2f1_real(1.0, 1.0, 2.0, z).unwrap();
            let expected = -(1.0 - z).ln() / z;
            assert!((s.value - expected).abs() < 1e-13 * expected.abs(), "z={z}");
        }
    }

    #[test]
    fn hyp0f_examples() {
        assert_eq!(hyp_0f(&[2.0_f64, 1.0], 0.0).unwrap().value, 1.0);
        // single parameter reproduces the normalised Bessel series
        let (nu, v) = (0.8_f64, 1.7);
        let f = hyp_0f(&[nu + 1.0], v * v / 4.0).unwrap().value;
        let i = super::super::bessel_i_norm(nu, v).value;
        assert!((f - i).abs() < 1e-15 * i);
        // brute force 30-term partial sum
        let mut brute = 0.0_f64;
        let mut fact = 1.0;
        let (mut p2, mut p1) = (1.0, 1.0);
        for j in 0..30 {
            if j > 0 {
                fact *= j as f64;
                p2 *= 2.0 + (j - 1) as f64;
                p1 *= 1.0 + (j - 1) as f64;
            }
            brute += (-1.0f64).powi(j) / (p2 * p1 * fact);
        }
        let s = hyp_0f(&[2.0_f64, 1.0], -1.0).unwrap();
        assert!((s.value - brute).abs() < 1e-15);
        assert!(hyp_0f(&[-1.0_f64], 0.5).is_err());
    }
}
