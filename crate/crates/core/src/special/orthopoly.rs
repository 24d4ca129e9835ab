//! Gegenbauer (ultraspherical) and Chebyshev polynomials by recurrence.

use crate::error::{invalid, Result};
use crate::scalar::Real;

/// Incremental evaluation of `C_j^{(k)}(z)` for `j = 0, 1, 2, ...`.
///
/// Uses `j C_j = 2z(j+k-1) C_{j-1} - (j+2k-2) C_{j-2}` with `C_0 = 1`,
/// `C_1 = 2kz`.
#[derive(Debug, Clone)]
pub struct GegenbauerRecurrence<T> {
    k: T,
    z: T,
    next_j: usize,
    prev: T,
    curr: T,
}

impl<T: Real> GegenbauerRecurrence<T> {
    pub fn new(k: T, z: T) -> Result<Self> {
        if !(k > T::zero()) {
            return Err(invalid(format!("Gegenbauer parameter must be positive, got {k}")));
        }
        Ok(Self { k, z, next_j: 0, prev: T::zero(), curr: T::zero() })
    }
}

impl<T: Real> Iterator for GegenbauerRecurrence<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        let j = self.next_j;
        let two = T::one() + T::one();
        let value = match j {
            0 => T::one(),
            1 => two * self.k * self.z,
            _ => {
                let jf = T::of(j);
                (two * self.z * (jf + self.k - T::one()) * self.curr
                    - (jf + two * self.k - two) * self.prev)
                    / jf
            }
        };
        self.prev = self.curr;
        self.curr = value;
        self.next_j += 1;
        Some(value)
    }
}

/// `C_j^{(k)}(z)`. Rejects `k <= 0`.
pub fn gegenbauer<T: Real>(j: usize, k: T, z: T) -> Result<T> {
    Ok(GegenbauerRecurrence::new(k, z)?.nth(j).expect("recurrence is unbounded"))
}

/// `C_0^{(k)}(z), ..., C_jmax^{(k)}(z)`.
pub fn gegenbauer_sequence<T: Real>(jmax: usize, k: T, z: T) -> Result<Vec<T>> {
    Ok(GegenbauerRecurrence::new(k, z)?.take(jmax + 1).collect())
}

/// `C_j^{(k)}(1) = (2k)_j / j!`, computed as a running product.
pub fn gegenbauer_at_one<T: Real>(j: usize, k: T) -> T {
    let two_k = k + k;
    (0..j).fold(T::one(), |acc, i| acc * (two_k + T::of(i)) / T::of(i + 1))
}

/// Chebyshev polynomial of the first kind `T_n(z)`.
pub fn chebyshev_t<T: Real>(n: usize, z: T) -> T {
    let (mut prev, mut curr) = (T::one(), z);
    if n == 0 {
        return prev;
    }
    let two = T::one() + T::one();
    for _ in 1..n {
        let next = two * z * curr - prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// Monomial coefficients of `T_n`, lowest degree first.
pub fn chebyshev_t_coeffs<T: Real>(n: usize) -> Vec<T> {
    let mut prev = vec![T::one()];
    if n == 0 {
        return prev;
    }
    let mut curr = vec![T::zero(), T::one()];
    let two = T::one() + T::one();
    for _ in 1..n {
        let mut next = vec![T::zero(); curr.len() + 1];
        for (i, &c) in curr.iter().enumerate() {
            next[i + 1] = next[i + 1] + two * c;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] = next[i] - c;
        }
        prev = curr;
        curr = next;
    }
    curr
}
