use serde::Serialize;

use crate::error::{invalid, Result};
use crate::scalar::{lit, Real};
use crate::special::{beta, gamma};

/// Dihedral group `D₂(n)` (order `2n`) with constant multiplicity `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DihedralParams<T> {
    n: usize,
    k: T,
    gamma_exp: T,
}

impl<T: Real> DihedralParams<T> {
    pub fn new(n: usize, k: T) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("dihedral order parameter n must be at least 2, got {n}")));
        }
        if !(k > T::zero()) || !k.is_finite() {
            return Err(invalid(format!("multiplicity k must be positive and finite, got {k}")));
        }
        Ok(Self { n, k, gamma_exp: T::of(n) * k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> T {
        self.k
    }

    /// `γ = n k`.
    pub fn gamma_exp(&self) -> T {
        self.gamma_exp
    }

    pub(crate) fn require_at_least(&self, min_n: usize, what: &str) -> Result<()> {
        if self.n < min_n {
            Err(invalid(format!("{what} requires n >= {min_n}, got n = {}", self.n)))
        } else {
            Ok(())
        }
    }

    /// `c_{n,k} = n B(k+1/2, 1/2) Γ(nk)`, the constant making `D(0, y) = 1`.
    pub fn normalization_constant(&self) -> T {
        let half = lit::<T>(0.5);
        T::of(self.n) * beta(self.k + half, half) * gamma(self.gamma_exp)
    }

    /// `c_{n,k} / (n B(k+1/2,1/2) Γ(nk))`: the factor in front of both series
    /// representations. Equal to one up to rounding.
    pub fn series_prefactor(&self) -> T {
        let half = lit::<T>(0.5);
        self.normalization_constant() / (T::of(self.n) * beta(self.k + half, half) * gamma(self.gamma_exp))
    }

    /// Half-width of the wedge, `π/n`.
    pub fn wedge_angle(&self) -> T {
        T::PI() / T::of(self.n)
    }
}

/// Point of the plane in polar form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarPoint<T> {
    pub radius: T,
    pub angle: T,
}

impl<T: Real> PolarPoint<T> {
    pub fn new(radius: T, angle: T) -> Self {
        Self { radius, angle }
    }

    pub fn from_cartesian(x: T, y: T) -> Self {
        Self { radius: x.hypot(y), angle: y.atan2(x) }
    }

    pub fn to_cartesian(&self) -> (T, T) {
        (self.radius * self.angle.cos(), self.radius * self.angle.sin())
    }
}

/// Maps the angle into `[0, π/n]` with the rotation `θ → θ + 2π/n` and the
/// reflection `θ → -θ`, both of which fix `cos(nθ)`.
pub fn wedge_reduce<T: Real>(point: PolarPoint<T>, n: usize) -> PolarPoint<T> {
    let period = T::TAU() / T::of(n);
    let half = period * lit(0.5);
    let mut a = point.angle - period * (point.angle / period).floor();
    if a >= period || a < T::zero() {
        a = T::zero();
    }
    if a > half {
        a = period - a;
    }
    PolarPoint { radius: point.radius, angle: a }
}

/// `b_s = cos(θ + 2πs/n)` for `s = 1..n`; the last entry is `cos θ`.
#[derive(Debug, Clone, PartialEq)]
pub struct BCoeffs<T> {
    pub theta: T,
    pub n: usize,
    pub values: Vec<T>,
}

impl<T: Real> BCoeffs<T> {
    pub fn new(theta: T, n: usize) -> Self {
        let values = (1..=n)
            .map(|s| (theta + T::TAU() * T::of(s) / T::of(n)).cos())
            .collect();
        Self { theta, n, values }
    }
}
