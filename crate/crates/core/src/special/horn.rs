//! Confluent Horn function `Φ₂⁽ⁿ⁾(β₁..βₙ; γ; z₁..zₙ)`.
//!
//! The n-fold series is regrouped by total degree `N = j₁ + … + jₙ`. The
//! degree-`N` numerator is the coefficient of `t^N` in `∏_s Σ_m (β_s)_m
//! (z_s t)^m / m!`, obtained by convolving the univariate sequences one
//! variable at a time, so that each new degree costs `O(N n)`. Dividing by
//! `(γ)_N` gives the degree contribution. The same convolution run on
//! absolute values gives a majorant used for the stopping rule.

use super::SeriesValue;
use crate::config::EvalConfig;
use crate::error::{invalid, Error, Result};
use crate::scalar::Real;
use crate::summation::Accumulator;

#[derive(Debug, Clone, PartialEq)]
pub struct HornArgs<T> {
    betas: Vec<T>,
    gamma: T,
    zs: Vec<T>,
}

impl<T: Real> HornArgs<T> {
    pub fn new(betas: Vec<T>, gamma: T, zs: Vec<T>) -> Result<Self> {
        if betas.is_empty() || betas.len() != zs.len() {
            return Err(invalid(format!(
                "Horn function needs equal nonzero numbers of parameters and arguments, got {} and {}",
                betas.len(),
                zs.len()
            )));
        }
        if gamma.is_nonpositive_integer() {
            return Err(invalid(format!("Horn denominator parameter {gamma} is a nonpositive integer")));
        }
        Ok(Self { betas, gamma, zs })
    }

    pub fn betas(&self) -> &[T] {
        &self.betas
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn zs(&self) -> &[T] {
        &self.zs
    }
}

/// Series value together with the sum of the absolute-value majorant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HornValue<T> {
    pub series: SeriesValue<T>,
    pub majorant: T,
}

/// Evaluates `Φ₂⁽ⁿ⁾` by degree; see the module docs.
pub fn horn_phi2<T: Real>(args: &HornArgs<T>, cfg: &EvalConfig<T>) -> Result<SeriesValue<T>> {
    horn_phi2_with_majorant(args, cfg).map(|h| h.series)
}

pub fn horn_phi2_with_majorant<T: Real>(args: &HornArgs<T>, cfg: &EvalConfig<T>) -> Result<HornValue<T>> {
    let n = args.betas.len();
    let cap = cfg.max_terms.max(1);
    // coeffs[s][m] = (β_s)_m z_s^m / m!; conv[s] = coeffs[0] * ... * coeffs[s]
    let mut coeffs: Vec<Vec<T>> = vec![Vec::with_capacity(64); n];
    let mut abs_coeffs: Vec<Vec<T>> = vec![Vec::with_capacity(64); n];
    let mut conv: Vec<Vec<T>> = vec![Vec::with_capacity(64); n];
    let mut abs_conv: Vec<Vec<T>> = vec![Vec::with_capacity(64); n];

    let mut acc = Accumulator::new(cfg.summation);
    let mut maj_acc = Accumulator::new(cfg.summation);
    let mut inv_poch = T::one();
    let mut prev_maj = T::zero();
    let mut small_run = 0usize;

    for deg in 0..cap {
        let d = T::of(deg);
        for s in 0..n {
            let (c, ac) = if deg == 0 {
                (T::one(), T::one())
            } else {
                let factor = (args.betas[s] + d - T::one()) * args.zs[s] / d;
                (coeffs[s][deg - 1] * factor, abs_coeffs[s][deg - 1] * factor.abs())
            };
            coeffs[s].push(c);
            abs_coeffs[s].push(ac);
        }
        conv[0].push(coeffs[0][deg]);
        abs_conv[0].push(abs_coeffs[0][deg]);
        for s in 1..n {
            let mut v = Accumulator::new(cfg.summation);
            let mut av = T::zero();
            for i in 0..=deg {
                v.add(conv[s - 1][i] * coeffs[s][deg - i]);
                av = av + abs_conv[s - 1][i] * abs_coeffs[s][deg - i];
            }
            conv[s].push(v.value());
            abs_conv[s].push(av);
        }
        if deg > 0 {
            inv_poch = inv_poch / (args.gamma + d - T::one());
        }
        let term = conv[n - 1][deg] * inv_poch;
        let maj = abs_conv[n - 1][deg] * inv_poch.abs();
        if !term.is_finite() || !maj.is_finite() {
            return Err(Error::NonFinite("Horn series"));
        }
        acc.add(term);
        maj_acc.add(maj);

        let thr = cfg.threshold(acc.value());
        small_run = if maj <= thr { small_run + 1 } else { 0 };
        if small_run >= cfg.window {
            let q = if prev_maj > T::zero() { maj / prev_maj } else { T::zero() };
            if q < T::one() {
                let tail = maj * q / (T::one() - q);
                if tail <= thr {
                    return Ok(HornValue {
                        series: SeriesValue { value: acc.value(), tail_bound: tail, terms_used: deg + 1 },
                        majorant: maj_acc.value(),
                    });
                }
            }
        }
        prev_maj = maj;
    }
    Err(Error::NonConvergence { series: "Horn Phi2", terms: cap })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> EvalConfig<f64> {
        EvalConfig::default()
    }

    /// Kummer 1F1 by its own term recurrence.
    fn kummer(a: f64, b: f64, z: f64) -> f64 {
        let (mut s, mut t) = (0.0, 1.0);
        for m in 0..400 {
            s += t;
            t *= (a + m as f64) / (b + m as f64) * z / (m as f64 + 1.0);
        }
        s
    }

    #[test]
    fn zero_arguments_give_one() {
        let args = HornArgs::new(vec![0.5, 1.5, 2.0], 3.0, vec![0.0; 3]).unwrap();
        let s = horn_phi2(&args, &cfg()).unwrap();
        assert_eq!(s.value, 1.0);
    }

    #[test]
    fn one_variable_is_kummer() {
        let args = HornArgs::new(vec![1.0], 2.0, vec![1.0]).unwrap();
        let s = horn_phi2(&args, &cfg()).unwrap();
        assert!((s.value - (std::f64::consts::E - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn equal_arguments_collapse_to_kummer() {
        // ∏ (1-t)^{-β} = (1-t)^{-nβ}
        let args = HornArgs::new(vec![0.5; 3], 2.0, vec![0.7; 3]).unwrap();
        let s = horn_phi2(&args, &cfg()).unwrap();
        let expected = kummer(1.5, 2.0, 0.7);
        assert!((s.value - expected).abs() < 1e-14 * expected);
    }

    #[test]
    fn two_variable_brute_force() {
        let (b1, b2, g, z1, z2) = (0.7_f64, 1.3, 2.2, 1.1_f64, -0.8_f64);
        let mut brute = 0.0;
        for j1 in 0..60usize {
            for j2 in 0..60usize {
                let num = super::super::pochhammer(b1, j1) * super::super::pochhammer(b2, j2);
                let den = super::super::pochhammer(g, j1 + j2)
                    * super::super::factorial::<f64>(j1)
                    * super::super::factorial::<f64>(j2);
                brute += num / den * z1.powi(j1 as i32) * z2.powi(j2 as i32);
            }
        }
        let args = HornArgs::new(vec![b1, b2], g, vec![z1, z2]).unwrap();
        let s = horn_phi2(&args, &cfg()).unwrap();
        assert!((s.value - brute).abs() < 1e-13 * brute.abs());
    }

    #[test]
    fn rejects_bad_args() {
        assert!(HornArgs::new(vec![1.0_f64], 2.0, vec![]).is_err());
        assert!(HornArgs::<f64>::new(vec![], 2.0, vec![]).is_err());
        assert!(HornArgs::new(vec![1.0_f64], -3.0, vec![0.1]).is_err());
    }

    #[test]
    fn degree_cap_reports_nonconvergence() {
        let args = HornArgs::new(vec![1.0_f64; 2], 1.0, vec![50.0, 40.0]).unwrap();
        let tight = EvalConfig { max_terms: 10, ..cfg() };
        assert!(matches!(horn_phi2(&args, &tight), Err(Error::NonConvergence { .. })));
    }
}
