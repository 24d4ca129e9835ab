//! Low-degree real polynomials (coefficients lowest degree first) and
//! real-root isolation on an interval.

use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Poly<T>(pub Vec<T>);

impl<T: Real> Poly<T> {
    pub fn linear(c0: T, c1: T) -> Self {
        Poly(vec![c0, c1])
    }

    pub fn constant(c: T) -> Self {
        Poly(vec![c])
    }

    pub fn eval(&self, x: T) -> T {
        self.0.iter().rev().fold(T::zero(), |acc, &c| acc * x + c)
    }

    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|&c| c != T::zero()).unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let len = self.0.len().max(o.0.len());
        Poly((0..len).map(|i| *self.0.get(i).unwrap_or(&T::zero()) + *o.0.get(i).unwrap_or(&T::zero())).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = vec![T::zero(); self.0.len() + o.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Poly(out)
    }

    pub fn derivative(&self) -> Self {
        if self.0.len() <= 1 {
            return Poly::constant(T::zero());
        }
        Poly(self.0.iter().enumerate().skip(1).map(|(i, &c)| c * T::of(i)).collect())
    }

    /// Real roots in the open interval `(lo, hi)`, ascending, found by
    /// splitting at the roots of the derivative and bisecting every
    /// monotone piece with a sign change.
    pub fn roots_in(&self, lo: T, hi: T) -> Vec<T> {
        let d = self.degree();
        if d == 0 {
            return Vec::new();
        }
        if d == 1 {
            let r = -self.0[0] / self.0[1];
            return if r > lo && r < hi { vec![r] } else { Vec::new() };
        }
        let mut cuts = vec![lo];
        cuts.extend(self.derivative().roots_in(lo, hi));
        cuts.push(hi);
        let mut out = Vec::new();
        for win in cuts.windows(2) {
            let (a, b) = (win[0], win[1]);
            let (fa, fb) = (self.eval(a), self.eval(b));
            if fb == T::zero() && b < hi {
                out.push(b);
            } else if fa != T::zero() && fb != T::zero() && (fa < T::zero()) != (fb < T::zero()) {
                out.push(self.bisect(a, b, fa));
            }
        }
        out.dedup();
        out
    }

    fn bisect(&self, mut a: T, mut b: T, fa: T) -> T {
        let neg = fa < T::zero();
        for _ in 0..200 {
            let m = (a + b) / (T::one() + T::one());
            if m <= a || m >= b {
                break;
            }
            let fm = self.eval(m);
            if fm == T::zero() {
                return m;
            }
            if (fm < T::zero()) == neg {
                a = m;
            } else {
                b = m;
            }
        }
        (a + b) / (T::one() + T::one())
    }
}
