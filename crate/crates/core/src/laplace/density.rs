use rayon::prelude::*;
use serde::Serialize;

use super::disk::{disk_constant, RadialRule};
use super::poly::Poly;
use super::EvenDihedralParams;
use crate::config::EvalResult;
use crate::dihedral::PolarPoint;
use crate::error::{invalid, Error, Result};
use crate::scalar::{lit, Real};
use crate::simplex::rules::{tanh_sinh, tanh_sinh_beta, tanh_sinh_extent, Node};
use crate::simplex::{integrate_dirichlet, QuadratureScheme};
use crate::special::ln_gamma;
use crate::summation::{Accumulator, Summation};

/// `(ac)²` below which the ellipse counts as collapsed (`ac < 1e-14`).
const COLLAPSED: f64 = 1e-28;

/// Value of `H_p(ρ, z)` and whether the quadrature met a point of the
/// region `E_{z,ρ,p}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityValue<T> {
    pub result: EvalResult<T>,
    pub region_nonempty: bool,
}

/// Density integrand at one simplex point. With `F = a² · bracket`,
///
/// `K ac (2/(ρ²(ac)²))^ν (F/a²)^{ν-1} = (2K/ρ²) s^{ν-1} / (ac)`,
/// `s = 2F / (ρ² (ac)² a²) = 1 - |w|²`, the preimage of `z` in the unit disk.
/// `s > 1` cannot occur in exact arithmetic; such points (rounding near the
/// collapsed vertex `a = 0`) are dropped.
struct Kernel<T> {
    nu: T,
    scale: T,
    half_rho2: T,
    z1: T,
    z2: T,
}

impl<T: Real> Kernel<T> {
    fn new(nu_exp: T, rho: T, z: (T, T)) -> Self {
        let two = lit::<T>(2.0);
        Self {
            nu: nu_exp - lit(0.5),
            scale: two * disk_constant(nu_exp) / (rho * rho),
            half_rho2: rho * rho / two,
            z1: z.0,
            z2: z.1,
        }
    }

    /// `F = ρ²(ac)²a²/2 - (ac)² z₁² - (a² z₂ - (ab) z₁)²`.
    fn bracket(&self, a2: T, ac2: T, ab: T) -> T {
        let t = a2 * self.z2 - ab * self.z1;
        self.half_rho2 * ac2 * a2 - ac2 * self.z1 * self.z1 - t * t
    }

    /// Integrand given `(ac)²`, `a²` and `F > 0`.
    fn eval(&self, ac2: T, a2: T, f: T) -> Option<T> {
        let s = f / (self.half_rho2 * ac2 * a2);
        if !(s > T::zero()) || s > T::one() + T::lit(1e-9) {
            return None;
        }
        Some(self.scale * s.min(T::one()).powf(self.nu - T::one()) / ac2.sqrt())
    }
}

fn check_point<T: Real>(params: &EvenDihedralParams<T>, rho: T, z: (T, T)) -> Result<()> {
    params.require_density()?;
    if !(rho > T::zero()) || !rho.is_finite() {
        return Err(invalid(format!("density needs rho > 0, got {rho}")));
    }
    if !z.0.is_finite() || !z.1.is_finite() {
        return Err(invalid("density point must be finite"));
    }
    Ok(())
}

/// Laplace density `H_p(ρ, z)`, an integral over `u ∈ Σ_p` restricted to
/// `E_{z,ρ,p} = {u : ρ²a²c²/2 > (cz₁)² + (az₂ - bz₁)²}` against
/// Dirichlet(k, …, k).
///
/// Under tanh-sinh the innermost simplex coordinate is split at the exact
/// roots of the bracket (a cubic in that coordinate), so the boundary
/// singularity `bracket^{pk-3/2}` sits at rule endpoints; outer coordinates
/// use plain tanh-sinh. Monte Carlo and the product rule are accepted only
/// for `pk >= 3/2`, where the integrand stays bounded.
pub fn density_h<T: Real>(
    params: &EvenDihedralParams<T>,
    rho: T,
    z: (T, T),
    scheme: &QuadratureScheme,
) -> Result<DensityValue<T>> {
    check_point(params, rho, z)?;
    scheme.validate()?;
    let nu_exp = T::of(params.p()) * params.k();
    let kernel = Kernel::new(nu_exp, rho, z);
    match *scheme {
        QuadratureScheme::TanhSinh { level } => {
            let (fine, hit) = split_rule(params, &kernel, level)?;
            let coarse = if level > 0 { split_rule(params, &kernel, level - 1)?.0 .0 } else { T::zero() };
            Ok(DensityValue {
                result: EvalResult { value: fine.0, error: (fine.0 - coarse).abs(), terms_used: 0, samples_used: fine.1 },
                region_nonempty: hit,
            })
        }
        _ => {
            if nu_exp < lit(1.5) {
                return Err(scheme.unsupported(
                    "for pk < 3/2 the density has a boundary singularity; use the tanh-sinh scheme",
                ));
            }
            let hit = std::sync::atomic::AtomicBool::new(false);
            let r = integrate_dirichlet(&params.alphas(), scheme, |u| {
                let u: Vec<T> = u.iter().map(|&x| T::from_f64(x).unwrap_or_else(T::zero)).collect();
                let (a2, im, ac2) = params.stable_parts(&u);
                if ac2 <= T::lit(COLLAPSED) {
                    return T::zero();
                }
                let f = kernel.bracket(a2, ac2, im);
                if !(f > T::zero()) {
                    return T::zero();
                }
                match kernel.eval(ac2, a2, f) {
                    Some(v) => {
                        hit.store(true, std::sync::atomic::Ordering::Relaxed);
                        v
                    }
                    None => T::zero(),
                }
            })?;
            Ok(DensityValue { result: r, region_nonempty: hit.into_inner() })
        }
    }
}

/// Iterated tanh-sinh with root splitting in the last coordinate; returns
/// `((value, nodes), region hit)`.
fn split_rule<T: Real>(params: &EvenDihedralParams<T>, kernel: &Kernel<T>, level: u32) -> Result<((T, usize), bool)> {
    let p = params.p();
    let k = params.k().to_f64_lossy();
    let t_max = tanh_sinh_extent(T::min_positive_value().to_f64_lossy());
    let outer: Vec<Vec<Node>> = (0..p - 2).map(|i| tanh_sinh_beta(k, (p - 1 - i) as f64 * k, level, t_max)).collect();
    let inner = tanh_sinh(level, t_max);
    let budget = outer.iter().map(|r| r.len() as u64).product::<u64>() * inner.len() as u64;
    if budget > crate::simplex::MAX_RULE_NODES {
        return Err(Error::UnsupportedScheme(format!(
            "density rule needs about {budget} nodes for p = {p}; lower the tanh-sinh level"
        )));
    }
    let ln_beta = T::lit(2.0 * ln_gamma(k) - ln_gamma(2.0 * k));
    let ctx = SplitCtx { params, kernel, inner: &inner, ln_beta, k: params.k() };
    let mut u = vec![T::zero(); p];

    if outer.is_empty() {
        let mut acc = Accumulator::new(Summation::Compensated);
        let (n, hit) = ctx.inner_integral(&mut u, T::one(), T::one(), &mut acc);
        return Ok(((acc.value(), n.max(1)), hit));
    }
    let cast = |x: f64| T::from_f64(x).unwrap_or_else(T::zero);
    let parts: Vec<(T, usize, bool)> = outer[0]
        .par_iter()
        .map(|nd| {
            let mut acc = Accumulator::new(Summation::Compensated);
            let mut u = vec![T::zero(); p];
            u[0] = cast(nd.x);
            let (n, hit) = ctx.outer(&outer, 1, &mut u, cast(nd.xc), cast(nd.w), &mut acc);
            (acc.value(), n, hit)
        })
        .collect();
    let mut acc = Accumulator::new(Summation::Compensated);
    let mut nodes = 0;
    let mut hit = false;
    for (v, n, h) in parts {
        acc.add(v);
        nodes += n;
        hit |= h;
    }
    Ok(((acc.value(), nodes), hit))
}

struct SplitCtx<'a, T> {
    params: &'a EvenDihedralParams<T>,
    kernel: &'a Kernel<T>,
    inner: &'a [Node],
    ln_beta: T,
    k: T,
}

/// Bernstein coefficients of a polynomial on `[0, 1]`.
#[derive(Clone)]
struct Bern<T>(Vec<T>);

impl<T: Real> Bern<T> {
    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    /// de Casteljau with both `x` and `1 - x` supplied, so values near
    /// either end keep their relative accuracy.
    fn eval(&self, x: T, xc: T) -> T {
        let mut b = self.0.clone();
        for r in 1..b.len() {
            for i in 0..b.len() - r {
                b[i] = xc * b[i] + x * b[i + 1];
            }
        }
        b[0]
    }

    fn elevate(&self, to: usize) -> Self {
        let mut b = self.clone();
        while b.degree() < to {
            let d = T::of(b.degree() + 1);
            let c = &b.0;
            let mut e = Vec::with_capacity(c.len() + 1);
            e.push(c[0]);
            for i in 1..c.len() {
                let f = T::of(i) / d;
                e.push(f * c[i - 1] + (T::one() - f) * c[i]);
            }
            e.push(c[c.len() - 1]);
            b = Bern(e);
        }
        b
    }

    fn mul(&self, o: &Self) -> Self {
        let (m, n) = (self.degree(), o.degree());
        let mut out = vec![T::zero(); m + n + 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in o.0.iter().enumerate() {
                let w = T::lit(binomial(m, i) * binomial(n, j) / binomial(m + n, i + j));
                out[i + j] = out[i + j] + w * a * b;
            }
        }
        Bern(out)
    }

    fn combine(&self, s: T, o: &Self, t: T) -> Self {
        let d = self.degree().max(o.degree());
        let (a, b) = (self.elevate(d), o.elevate(d));
        Bern(a.0.iter().zip(&b.0).map(|(&x, &y)| s * x + t * y).collect())
    }

    fn to_poly(&self) -> Poly<T> {
        let d = self.degree();
        let x = Poly::linear(T::zero(), T::one());
        let xc = Poly::linear(T::one(), -T::one());
        let mut out = Poly::constant(T::zero());
        for (i, &b) in self.0.iter().enumerate() {
            let mut term = Poly::constant(b * T::lit(binomial(d, i)));
            for _ in 0..i {
                term = term.mul(&x);
            }
            for _ in i..d {
                term = term.mul(&xc);
            }
            out = out.add(&term);
        }
        out
    }

    /// Taylor coefficients `F(0), F'(0), F''(0)/2, …` at `x = 0`.
    fn jet_at_zero(&self) -> Vec<T> {
        self.to_poly().0
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Taylor coefficients of `f` at `c`, with `f(c)` replaced by `value`.
fn jet<T: Real>(f: &Poly<T>, c: T, value: T) -> Vec<T> {
    let mut out = vec![value];
    let mut d = f.derivative();
    let mut fact = T::one();
    for i in 1..=f.degree() {
        fact = fact * T::of(i);
        out.push(d.eval(c) / fact);
        d = d.derivative();
    }
    out
}

/// `Σ jet_i h^i`.
fn horner<T: Real>(jet: &[T], h: T) -> T {
    jet.iter().rev().fold(T::zero(), |acc, &c| acc * h + c)
}

impl<T: Real> SplitCtx<'_, T> {
    /// Fills layout position `d` from rule `d`; `u[..d]` holds the
    /// coordinates fixed so far and `rem` the remaining mass.
    fn outer(&self, rules: &[Vec<Node>], d: usize, u: &mut [T], rem: T, w: T, acc: &mut Accumulator<T>) -> (usize, bool) {
        if d == rules.len() {
            let mut local = Accumulator::new(Summation::Compensated);
            let r = self.inner_integral(u, rem, w, &mut local);
            acc.add(local.value());
            return r;
        }
        let cast = |x: f64| T::from_f64(x).unwrap_or_else(T::zero);
        let mut nodes = 0;
        let mut hit = false;
        for nd in &rules[d] {
            u[d] = rem * cast(nd.x);
            let (n, h) = self.outer(rules, d + 1, u, rem * cast(nd.xc), w * cast(nd.w), acc);
            nodes += n;
            hit |= h;
        }
        (nodes, hit)
    }

    /// `w ∫₀¹ Beta(k,k)(x) kernel dx` where `u_{p-1} = rem·x`, `u₀ = rem·(1-x)`
    /// and `u[..p-2]` carries the outer coordinates.
    ///
    /// `a²`, `ab`, `(ac)²` and the bracket `F` are built in Bernstein form
    /// from their exact end values, so they stay accurate at both ends of
    /// `[0, 1]`; the bracket is split at its roots and evaluated by Taylor
    /// expansion about the nearer window end, with the value at a root taken
    /// as exactly zero.
    fn inner_integral(&self, u: &mut [T], rem: T, w: T, acc: &mut Accumulator<T>) -> (usize, bool) {
        let p = self.params.p();
        let mut u0 = u.to_vec();
        u0[p - 2] = T::zero();
        u0[p - 1] = rem;
        let mut u1 = u.to_vec();
        u1[p - 2] = rem;
        u1[p - 1] = T::zero();
        let linear = |c: &[T]| {
            let at = |v: &[T]| v.iter().zip(c).fold(T::zero(), |s, (&x, &y)| s + x * y);
            Bern(vec![at(&u0), at(&u1)])
        };
        let a2 = linear(self.params.lift());
        let im = linear(self.params.sine());
        let bil = |x: &[T], y: &[T]| self.params.bilinear(x, y).max(T::zero());
        let ac2 = Bern(vec![bil(&u0, &u0), bil(&u0, &u1), bil(&u1, &u1)]);
        let kz = self.kernel;
        let t = a2.combine(kz.z2, &im, -kz.z1);
        let f = ac2
            .mul(&a2)
            .combine(kz.half_rho2, &ac2, -kz.z1 * kz.z1)
            .combine(T::one(), &t.mul(&t), -T::one());

        let mono = f.to_poly();
        let roots = mono.roots_in(T::zero(), T::one());
        let end_jet = |b: &Bern<T>| b.jet_at_zero();
        let mut rev = f.0.clone();
        rev.reverse();
        let mut cuts = vec![(T::zero(), end_jet(&f))];
        cuts.extend(roots.iter().map(|&r| (r, jet(&mono, r, T::zero()))));
        cuts.push((T::one(), end_jet(&Bern(rev))));

        let mut nodes = 0;
        let mut hit = false;
        // windows this narrow only arise from roots split by rounding
        let sliver = T::epsilon() * lit::<T>(64.0);
        let km1 = self.k - T::one();
        for win in cuts.windows(2) {
            let (l, jl, r, jr) = (win[0].0, &win[0].1, win[1].0, &win[1].1);
            let width = r - l;
            if !(width > sliver) || !(f.eval(l + width * lit(0.5), (T::one() - r) + width * lit(0.5)) > T::zero()) {
                continue;
            }
            for nd in self.inner {
                let (tt, tc) = (T::from_f64(nd.x).unwrap_or_else(T::zero), T::from_f64(nd.xc).unwrap_or_else(T::zero));
                if tt == T::zero() || tc == T::zero() {
                    continue;
                }
                let x = l + width * tt;
                let xc = (T::one() - r) + width * tc;
                // the reversed jet at the right end is in powers of 1 - x
                let fx = if tt <= tc {
                    horner(jl, width * tt)
                } else if r == T::one() {
                    horner(jr, width * tc)
                } else {
                    horner(jr, -(width * tc))
                };
                let acv = ac2.eval(x, xc);
                if !(fx > T::zero()) || acv <= T::lit(COLLAPSED) {
                    continue;
                }
                let lw = T::from_f64(nd.w).unwrap_or_else(T::zero).ln()
                    + tt.ln()
                    + tc.ln()
                    + width.ln()
                    + km1 * (x.ln() + xc.ln())
                    - self.ln_beta;
                if let Some(v) = kz.eval(acv, a2.eval(x, xc), fx) {
                    acc.add(w * lw.exp() * v);
                    hit = true;
                }
                nodes += 1;
            }
        }
        (nodes, hit)
    }
}

/// `D_k(ρ, y)` through the Laplace representation with the order of
/// integration swapped: for each simplex point the `z`-integral over the
/// ellipse `V_{u,ρ,p}` becomes, after `z = (ρ/√2)(a w₁, b w₁ + c w₂)`,
/// the disk integral `K ∫_{|w|<1} e^{⟨w', w⟩} (1-|w|²)^{pk-3/2} dw` with
/// `w' = (ρ/√2)(a y₁ + b y₂, c y₂)`.
///
/// The simplex coordinate follows `scheme`; the disk integral is always
/// deterministic (Gauss–Jacobi in `|w|²` with 32 nodes under Monte Carlo,
/// otherwise the matching rule), so Monte Carlo runs share their samples
/// with [`super::eval_boundary_bessel`] at the same seed.
pub fn eval_laplace<T: Real>(
    params: &EvenDihedralParams<T>,
    rho: T,
    y: PolarPoint<T>,
    scheme: &QuadratureScheme,
) -> Result<EvalResult<T>> {
    params.require_density()?;
    scheme.validate()?;
    if !(rho >= T::zero()) || !rho.is_finite() || !(y.radius >= T::zero()) || !y.radius.is_finite() {
        return Err(invalid(format!("radii must be finite and nonnegative, got rho = {rho}, r = {}", y.radius)));
    }
    let nu_exp = T::of(params.p()) * params.k();
    let nu = nu_exp - lit(0.5);
    let radial_scheme = match *scheme {
        QuadratureScheme::MonteCarlo { .. } => QuadratureScheme::Product { order: 32 },
        other => other,
    };
    let radial = RadialRule::<T>::new(nu.to_f64_lossy(), &radial_scheme, false)?;
    let scale = disk_constant(nu_exp) * T::PI() / nu;
    let (y1, y2) = y.to_cartesian();
    let s = rho / lit::<T>(2.0).sqrt();
    let r = integrate_dirichlet(&params.alphas(), scheme, |u| {
        let u: Vec<T> = u.iter().map(|&x| T::from_f64(x).unwrap_or_else(T::zero)).collect();
        let (a2, im, ac2) = params.stable_parts(&u);
        let (re, ac2) = (a2 - T::one(), ac2.max(T::zero()));
        let (w1, w2) = if a2 > T::epsilon() {
            let a = a2.sqrt();
            (s * (a * y1 + im / a * y2), s * (ac2.sqrt() / a * y2))
        } else {
            let q = y1 * y1 + y2 * y2 + (y1 * y1 - y2 * y2) * re + lit::<T>(2.0) * y1 * y2 * im;
            (s * q.max(T::zero()).sqrt(), T::zero())
        };
        scale * radial.disk_mean(w1, w2)
    })?;
    let c = params.dihedral().series_prefactor();
    Ok(EvalResult { value: c * r.value, error: c * r.error, ..r })
}

/// `∫ H_p(ρ, z) dz` over the disk `|z| < ρ`.
///
/// `H_p(ρ, ·)` is invariant under the group, so the integral is `4p` times
/// the integral over the wedge `0 < arg z < π/(2p)`. Each ray is split where
/// it leaves the orbit polygon with vertices `ρe^{isπ/p}`, so the kink of
/// `H_p` along the polygon edge and its singularity along the ray
/// `arg z = 0` sit at rule endpoints. The angle and both ray segments use
/// tanh-sinh at `level`; each density value uses `scheme`.
pub fn total_mass(
    params: &EvenDihedralParams<f64>,
    rho: f64,
    level: u32,
    scheme: &QuadratureScheme,
) -> Result<f64> {
    params.require_density()?;
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(invalid(format!("total mass needs rho > 0, got {rho}")));
    }
    let p = params.p();
    let wedge = std::f64::consts::FRAC_PI_2 / p as f64;
    let apothem = rho * wedge.cos();
    let nodes = tanh_sinh(level, tanh_sinh_extent(f64::MIN_POSITIVE));
    let parts: Vec<Result<f64>> = nodes
        .par_iter()
        .map(|nd| {
            let psi = wedge * nd.x;
            let edge = apothem / (wedge * nd.xc).cos();
            let (c, sn) = (psi.cos(), psi.sin());
            let mut ray = 0.0;
            for (lo, hi) in [(0.0, edge), (edge, rho)] {
                let width = hi - lo;
                if !(width > 0.0) {
                    continue;
                }
                for t in &nodes {
                    let r = lo + width * t.x;
                    let h = density_h(params, rho, (r * c, r * sn), scheme)?.result.value;
                    ray += t.w * t.x * t.xc * width * r * h;
                }
            }
            Ok(nd.w * nd.x * nd.xc * wedge * ray)
        })
        .collect();
    Ok(4.0 * p as f64 * parts.into_iter().sum::<Result<f64>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laplace::eval_boundary_bessel;

    #[test]
    fn empty_outside_the_disk() {
        let par = EvenDihedralParams::new(2, 1.0).unwrap();
        for z in [(1.01, 0.0), (0.8, 0.8), (-2.0, 0.3)] {
            for scheme in [QuadratureScheme::TanhSinh { level: 4 }, QuadratureScheme::Product { order: 12 }] {
                let h = density_h(&par, 1.0, z, &scheme).unwrap();
                assert_eq!(h.result.value, 0.0);
                assert!(!h.region_nonempty);
            }
        }
    }

    #[test]
    fn positive_at_origin() {
        for (p, k) in [(2, 1.0), (2, 0.4), (3, 1.0)] {
            let par = EvenDihedralParams::new(p, k).unwrap();
            let h = density_h(&par, 1.0, (0.0, 0.0), &QuadratureScheme::TanhSinh { level: 4 }).unwrap();
            assert!(h.result.value > 0.0 && h.region_nonempty);
        }
    }

    #[test]
    fn origin_value_for_p_two() {
        // H(0) = (2K/ρ²) ∫₀¹ dx / (2√(x(1-x))) = K π / ρ² with K = (2k - 1/2)/π
        let par = EvenDihedralParams::new(2, 1.0_f64).unwrap();
        for rho in [1.0, 2.0] {
            let h = density_h(&par, rho, (0.0, 0.0), &QuadratureScheme::TanhSinh { level: 5 }).unwrap().result.value;
            assert!((h - 1.5 / (rho * rho)).abs() < 1e-12, "{h}");
        }
    }

    #[test]
    fn p_two_k_one_is_a_tent_on_the_square() {
        // k = 1: ∫ √Q(x) / (x(1-x)) dx over the roots of Q splits into two
        // elementary integrals, giving H = (3/(2ρ²)) (1 - (|z₁|+|z₂|)/ρ)₊
        let par = EvenDihedralParams::new(2, 1.0_f64).unwrap();
        let rho = 1.4;
        for i in 0..40 {
            let z = (-1.5 + 0.073 * i as f64, 1.2 - 0.061 * i as f64);
            let tent = 1.5 / (rho * rho) * (1.0 - (z.0.abs() + z.1.abs()) / rho).max(0.0);
            // the product rule sees the bracket boundary as a kink
            for (scheme, tol) in [(QuadratureScheme::TanhSinh { level: 5 }, 1e-10), (QuadratureScheme::Product { order: 200 }, 1e-3)] {
                let h = density_h(&par, rho, z, &scheme).unwrap().result.value;
                assert!((h - tent).abs() <= tol, "{z:?} {scheme:?}: {h} {tent}");
            }
        }
    }

    #[test]
    fn mass_is_one() {
        for k in [0.5, 1.0] {
            let par = EvenDihedralParams::new(2, k).unwrap();
            let m = total_mass(&par, 1.3, 2, &QuadratureScheme::TanhSinh { level: 4 }).unwrap();
            assert!((m - 1.0).abs() < 1e-6, "k = {k}: {m}");
        }
    }

    #[test]
    fn singular_regime_requires_tanh_sinh() {
        let par = EvenDihedralParams::new(2, 0.5).unwrap();
        let r = density_h(&par, 1.0, (0.1, 0.1), &QuadratureScheme::Product { order: 8 });
        assert!(matches!(r, Err(Error::UnsupportedScheme(_))));
    }

    #[test]
    fn deterministic_schemes_agree_on_smooth_density() {
        let par = EvenDihedralParams::new(2, 2.0_f64).unwrap();
        let a = density_h(&par, 1.0, (0.2, 0.1), &QuadratureScheme::TanhSinh { level: 6 }).unwrap().result.value;
        let b = density_h(&par, 1.0, (0.2, 0.1), &QuadratureScheme::Product { order: 400 }).unwrap().result.value;
        assert!((a - b).abs() < 1e-4 * a, "{a} {b}");
    }

    #[test]
    fn laplace_matches_boundary_representation() {
        let par = EvenDihedralParams::new(2, 1.5_f64).unwrap();
        let y = PolarPoint::new(2.0, 0.3);
        let scheme = QuadratureScheme::Product { order: 24 };
        let l = eval_laplace(&par, 1.0, y, &scheme).unwrap().value;
        let b = eval_boundary_bessel(&par, 1.0, y, &scheme).unwrap().value;
        assert!((l - b).abs() < 1e-10 * b, "{l} {b}");
    }

    #[test]
    fn laplace_at_small_rho_is_one() {
        let par = EvenDihedralParams::new(3, 0.4_f64).unwrap();
        let v = eval_laplace(&par, 1e-9, PolarPoint::new(1.0, 0.2), &QuadratureScheme::Product { order: 6 }).unwrap();
        assert!((v.value - 1.0).abs() < 1e-12);
    }
}
