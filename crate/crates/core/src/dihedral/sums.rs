//! The finite sums `S_N(n, k, φ, θ)` regrouping the double Gegenbauer/Bessel
//! series by total degree, computed three independent ways.

use super::params::{BCoeffs, DihedralParams};
use crate::config::EvalConfig;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special::{gamma, gegenbauer_at_one, gegenbauer_sequence, pochhammer};
use crate::summation::{Accumulator, Summation};

/// Direct sum over `{(j, m) : 2m + nj = N}` of
/// `n(j+k) / (m! Γ(n(j+k)+m+1)) · C_j(cos nφ) C_j(cos nθ) / C_j(1)`.
pub fn s_n_direct<T: Real>(params: &DihedralParams<T>, phi: T, theta: T, big_n: usize) -> Result<T> {
    params.require_at_least(3, "S_N")?;
    let n = params.n();
    let k = params.k();
    let nf = T::of(n);
    let jmax = big_n / n;
    let cx = gegenbauer_sequence(jmax, k, (nf * phi).cos())?;
    let cy = gegenbauer_sequence(jmax, k, (nf * theta).cos())?;
    let mut acc = Accumulator::new(Summation::Compensated);
    for j in 0..=jmax {
        let rem = big_n - n * j;
        if rem % 2 == 1 {
            continue;
        }
        let m = rem / 2;
        let jk = T::of(j) + k;
        let coef = nf * jk / (gamma(T::of(m + 1)) * gamma(nf * jk + T::of(m + 1)));
        acc.add(coef * cx[j] * cy[j] / gegenbauer_at_one(j, k));
    }
    Ok(acc.value())
}

/// Reverse-lexicographic enumeration of the compositions of `total` into
/// `parts` nonnegative parts.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Vec<usize>,
    done: bool,
}

impl Compositions {
    pub fn new(total: usize, parts: usize) -> Self {
        assert!(parts > 0);
        let mut current = vec![0; parts];
        current[0] = total;
        Self { current, done: false }
    }

    /// `C(total + parts - 1, parts - 1)`.
    pub fn count(total: usize, parts: usize) -> u128 {
        let (top, r) = ((total + parts - 1) as u128, (parts - 1) as u128);
        (0..r).fold(1u128, |acc, i| acc * (top - i) / (i + 1))
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let last = self.current.len() - 1;
        match (0..last).rev().find(|&i| self.current[i] > 0) {
            Some(i) => {
                self.current[i] -= 1;
                let tail = self.current[last] + 1;
                self.current[last] = 0;
                self.current[i + 1] = tail;
            }
            None => self.done = true,
        }
        Some(out)
    }
}

/// Closed form of `S_N` as a sum over compositions `m₁+…+mₙ = N`:
///
/// `2^N/Γ(nk+N) Σ_m Σ_{j ≤ min m_s} (k)_j² / ((2k)_j j!) X^j ∏_s (k+j)_{m_s-j}
/// (b_s)^{m_s-j} / (m_s-j)!` with `X = -2^{2-n} sin(nθ) sin(nφ)` and
/// `b_s = cos(θ - φ + 2πs/n)`.
pub fn s_n_closed<T: Real>(
    params: &DihedralParams<T>,
    phi: T,
    theta: T,
    big_n: usize,
    cfg: &EvalConfig<T>,
) -> Result<T> {
    params.require_at_least(3, "S_N")?;
    let n = params.n();
    let k = params.k();
    let nf = T::of(n);
    let jmax = big_n / n;
    let count = Compositions::count(big_n, n) * (jmax as u128 + 1);
    if count > cfg.composition_cap as u128 {
        return Err(Error::CompositionCap { count, cap: cfg.composition_cap });
    }

    let b = BCoeffs::new(theta - phi, n);
    let two = T::one() + T::one();
    let x = -two.powi(2 - n as i32) * (nf * theta).sin() * (nf * phi).sin();
    // outer[j] = (k)_j^2 / ((2k)_j j!) X^j
    let outer: Vec<T> = (0..=jmax)
        .map(|j| {
            let pk = pochhammer(k, j);
            pk * pk / (pochhammer(k + k, j) * pochhammer(T::one(), j)) * x.powi(j as i32)
        })
        .collect();
    // inner[j][e] = (k+j)_e / e!
    let inner: Vec<Vec<T>> = (0..=jmax)
        .map(|j| {
            let mut row = Vec::with_capacity(big_n + 1);
            let mut v = T::one();
            for e in 0..=big_n {
                row.push(v);
                v = v * (k + T::of(j + e)) / T::of(e + 1);
            }
            row
        })
        .collect();
    let bpow: Vec<Vec<T>> = b
        .values
        .iter()
        .map(|&bs| (0..=big_n).scan(T::one(), |p, _| {
            let cur = *p;
            *p = *p * bs;
            Some(cur)
        }).collect())
        .collect();

    let mut acc = Accumulator::new(cfg.summation);
    for m in Compositions::new(big_n, n) {
        let lo = *m.iter().min().expect("n >= 3");
        for j in 0..=lo {
            if j > 0 && outer[j] == T::zero() {
                break;
            }
            let mut prod = outer[j];
            for (s, &ms) in m.iter().enumerate() {
                let e = ms - j;
                prod = prod * inner[j][e] * bpow[s][e];
            }
            acc.add(prod);
        }
    }
    Ok(two.powi(big_n as i32) / gamma(params.gamma_exp() + T::of(big_n)) * acc.value())
}

/// Boundary value `S_N(n, k, 0, θ) = 2^N/Γ(nk+N) Σ_{|j|=N} ∏_s (k)_{j_s}
/// (b_s^{θ})^{j_s} / j_s!`, computed as the degree-`N` coefficient of the
/// product of the univariate series `Σ_m (k)_m (b_s t)^m / m!`.
pub fn s_n_boundary<T: Real>(params: &DihedralParams<T>, theta: T, big_n: usize, summation: Summation) -> Result<T> {
    params.require_at_least(3, "S_N")?;
    let k = params.k();
    let b = BCoeffs::new(theta, params.n());
    let mut poly = vec![T::one()];
    poly.resize(big_n + 1, T::zero());
    for &bs in &b.values {
        let series: Vec<T> = (0..=big_n)
            .scan(T::one(), |c, e| {
                let cur = *c;
                *c = *c * (k + T::of(e)) * bs / T::of(e + 1);
                Some(cur)
            })
            .collect();
        let mut next = vec![T::zero(); big_n + 1];
        for (d, slot) in next.iter_mut().enumerate() {
            let mut acc = Accumulator::new(summation);
            for i in 0..=d {
                acc.add(poly[i] * series[d - i]);
            }
            *slot = acc.value();
        }
        poly = next;
    }
    let two = T::one() + T::one();
    Ok(two.powi(big_n as i32) / gamma(params.gamma_exp() + T::of(big_n)) * poly[big_n])
}
