//! Even dihedral groups `D₂(2p)`: the boundary representation of `D_k`
//! through the normalized Bessel function `i_{pk-1/2}` over `Σ_p`, and the
//! Laplace-type representation `D_k(x, y) = ∫ e^{⟨y,z⟩} H_p(ρ, z) dz`.

mod boundary;
mod coeffs;
mod density;
mod disk;
mod grid;
pub mod identities;
mod poly;

pub use boundary::eval_boundary_bessel;
pub use coeffs::{abc, ABCCoeffs};
pub use density::{density_h, eval_laplace, total_mass, DensityValue};
pub use disk::{disk_bessel_identity, disk_integral};
pub use grid::{in_orbit_hull, support_probe, DensityGrid, GridSpec, SupportReport};

use serde::Serialize;

use crate::dihedral::DihedralParams;
use crate::error::{invalid, Result};
use crate::scalar::{lit, Real};

/// `D₂(2p)` (order `4p`) with constant multiplicity `k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvenDihedralParams<T> {
    p: usize,
    k: T,
    a: Vec<T>,
    b: Vec<T>,
    /// `1 + cos θ_s` per coordinate in layout order.
    #[serde(skip)]
    lift: Vec<T>,
    /// `-sin θ_s` per coordinate in layout order.
    #[serde(skip)]
    sine: Vec<T>,
    /// `|e^{-iθ_s} - e^{-iθ_t}|²`, row-major over layout positions.
    #[serde(skip)]
    pair: Vec<T>,
}

impl<T: Real> EvenDihedralParams<T> {
    pub fn new(p: usize, k: T) -> Result<Self> {
        if p == 0 {
            return Err(invalid("half-order p must be at least 1"));
        }
        if !(k > T::zero()) || !k.is_finite() {
            return Err(invalid(format!("multiplicity k must be positive and finite, got {k}")));
        }
        // values that vanish exactly (θ = π/2, π, 3π/2) must stay zero
        let snap = |v: T| if v.abs() < lit(1e-14) { T::zero() } else { v };
        let angle = |s: usize| T::TAU() * T::of(s) / T::of(p);
        let half = |s: usize| T::PI() * T::of(s) / T::of(p);
        let layout: Vec<usize> = (0..p).map(|i| (i + 1) % p).collect();
        let pair = layout
            .iter()
            .flat_map(|&s| layout.iter().map(move |&t| (s, t)))
            .map(|(s, t)| {
                let h = half(s.abs_diff(t)).sin();
                snap(lit::<T>(4.0) * h * h)
            })
            .collect();
        Ok(Self {
            p,
            k,
            a: (1..p).map(|s| snap(angle(s).cos())).collect(),
            b: (1..p).map(|s| snap(-angle(s).sin())).collect(),
            lift: layout.iter().map(|&s| snap(lit::<T>(2.0) * half(s).cos().powi(2))).collect(),
            sine: layout.iter().map(|&s| snap(-angle(s).sin())).collect(),
            pair,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn k(&self) -> T {
        self.k
    }

    /// `A_s = cos(2sπ/p)` for `s = 1..p-1`.
    pub fn a_coeffs(&self) -> &[T] {
        &self.a
    }

    /// `B_s = -sin(2sπ/p)` for `s = 1..p-1`.
    pub fn b_coeffs(&self) -> &[T] {
        &self.b
    }

    /// Bessel index `ν = pk - 1/2`.
    pub fn nu(&self) -> T {
        T::of(self.p) * self.k - lit(0.5)
    }

    /// The same group as a member of the general dihedral family, `n = 2p`.
    pub fn dihedral(&self) -> DihedralParams<T> {
        DihedralParams::new(2 * self.p, self.k).expect("validated")
    }

    /// Preconditions of the density and the Laplace representation.
    pub fn require_density(&self) -> Result<()> {
        if self.p < 2 {
            return Err(invalid("the Laplace density needs p >= 2; for p = 1 the ellipse degenerates"));
        }
        if !(self.nu() > T::zero()) {
            return Err(invalid(format!("the Laplace density needs pk > 1/2, got pk = {}", T::of(self.p) * self.k)));
        }
        Ok(())
    }

    /// `(u₀ + Σ u_s A_s, Σ u_s B_s)`, the real and imaginary parts of
    /// `Σ_{s=0}^{p-1} u_s e^{-2iπs/p}`, for `u = (u₁, …, u_{p-1}, u₀)`.
    pub fn moment(&self, u: &[f64]) -> (T, T) {
        let cast = |x: f64| T::from_f64(x).unwrap_or_else(T::zero);
        let mut re = cast(u[self.p - 1]);
        let mut im = T::zero();
        for ((&us, &a), &b) in u.iter().zip(&self.a).zip(&self.b).take(self.p - 1) {
            let us = cast(us);
            re = re + us * a;
            im = im + us * b;
        }
        (re, im)
    }

    /// `(a², ab, (ac)²) = (1 + S_re, S_im, 1 - |S|²)` in a cancellation-free
    /// form: `a² = Σ u_s (1 + cos θ_s)` and
    /// `1 - |S|² = Σ_{s<t} u_s u_t |e^{-iθ_s} - e^{-iθ_t}|²`, so all three
    /// keep their relative accuracy near the simplex vertices.
    pub fn stable_parts(&self, u: &[T]) -> (T, T, T) {
        let mut a2 = T::zero();
        let mut im = T::zero();
        for (i, &ui) in u.iter().enumerate() {
            a2 = a2 + ui * self.lift[i];
            im = im + ui * self.sine[i];
        }
        (a2, im, self.bilinear(u, u))
    }

    /// Polarization `Q(u, v)` of `1 - |S|²`, so that `Q(u, u) = 1 - |S(u)|²`
    /// on the simplex.
    pub(crate) fn bilinear(&self, u: &[T], v: &[T]) -> T {
        let p = self.p;
        let mut acc = T::zero();
        for (&ui, pairs) in u.iter().zip(self.pair.chunks_exact(p)) {
            let row = pairs.iter().zip(v).fold(T::zero(), |r, (&q, &vj)| r + q * vj);
            acc = acc + ui * row;
        }
        acc * lit(0.5)
    }

    pub(crate) fn lift(&self) -> &[T] {
        &self.lift
    }

    pub(crate) fn sine(&self) -> &[T] {
        &self.sine
    }

    pub(crate) fn alphas(&self) -> Vec<f64> {
        vec![self.k.to_f64_lossy(); self.p]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients() {
        let p = EvenDihedralParams::new(4, 1.0_f64).unwrap();
        assert_eq!(p.a_coeffs().len(), 3);
        assert!((p.a_coeffs()[1] + 1.0).abs() < 1e-15);
        assert!((p.b_coeffs()[0] + 1.0).abs() < 1e-15);
        assert_eq!(p.dihedral().n(), 8);
        assert!(EvenDihedralParams::new(0, 1.0_f64).is_err());
        assert!(EvenDihedralParams::new(1, 1.0_f64).unwrap().require_density().is_err());
        assert!(EvenDihedralParams::new(2, 0.2_f64).unwrap().require_density().is_err());
    }

    #[test]
    fn stable_parts_match_the_moment() {
        let par = EvenDihedralParams::new(5, 1.0_f64).unwrap();
        let u = [0.1, 0.25, 0.05, 0.3, 0.3];
        let (re, im) = par.moment(&u);
        let (a2, ab, ac2) = par.stable_parts(&u);
        assert!((a2 - 1.0 - re).abs() < 1e-15);
        assert!((ab - im).abs() < 1e-15);
        assert!((ac2 - (1.0 - re * re - im * im)).abs() < 1e-15);
    }

    #[test]
    fn stable_parts_are_exact_at_the_antipodal_vertex() {
        let par = EvenDihedralParams::new(2, 1.0_f64).unwrap();
        let eps = 1e-300;
        let (a2, ab, ac2) = par.stable_parts(&[1.0, eps]);
        assert_eq!(ab, 0.0);
        assert!((a2 / (2.0 * eps) - 1.0).abs() < 1e-15);
        assert!((ac2 / (4.0 * eps) - 1.0).abs() < 1e-15);
    }
}
