//! One-dimensional rules on `[0, 1]`: Gauss–Jacobi for Beta weights and
//! tanh-sinh for endpoint singularities.
//!
//! Nodes are produced in `f64` as triples `(x, 1 - x, w)`, carrying the
//! complement separately so that points near `x = 1` keep full accuracy.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::special::ln_gamma;

/// Node of a rule on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub x: f64,
    pub xc: f64,
    pub w: f64,
}

/// `m`-point Gauss rule for the Beta(`a`, `b`) probability law on `[0, 1]`,
/// via Golub–Welsch on the Jacobi matrix of `(1-t)^{b-1} (1+t)^{a-1}`.
pub fn gauss_jacobi_beta(a: f64, b: f64, m: usize) -> Vec<Node> {
    assert!(a > 0.0 && b > 0.0 && m > 0);
    // Jacobi exponents: (1 - t)^al (1 + t)^be
    let (al, be) = (b - 1.0, a - 1.0);
    let s = al + be;
    let mut jac = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        let fi = i as f64;
        jac[(i, i)] = if i == 0 {
            (be - al) / (s + 2.0)
        } else {
            (be * be - al * al) / ((2.0 * fi + s) * (2.0 * fi + s + 2.0))
        };
        if i + 1 < m {
            let j = fi + 1.0;
            let off2 = if i == 0 {
                4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + s).powi(2) * (3.0 + s))
            } else {
                let d = 2.0 * j + s;
                4.0 * j * (j + al) * (j + be) * (j + s) / (d * d * (d + 1.0) * (d - 1.0))
            };
            let off = off2.sqrt();
            jac[(i, i + 1)] = off;
            jac[(i + 1, i)] = off;
        }
    }
    let eig = SymmetricEigen::new(jac);
    let mut nodes: Vec<Node> = (0..m)
        .map(|i| {
            let t = eig.eigenvalues[i];
            let v0 = eig.eigenvectors[(0, i)];
            Node { x: 0.5 * (1.0 + t), xc: 0.5 * (1.0 - t), w: v0 * v0 }
        })
        .collect();
    nodes.sort_by(|p, q| p.x.total_cmp(&q.x));
    nodes
}

/// Half-width of the tanh-sinh abscissa range so that the smallest node
/// distance to an endpoint is about `smallest^(1/3)`.
pub fn tanh_sinh_extent(smallest: f64) -> f64 {
    (-smallest.ln() / (3.0 * std::f64::consts::PI)).asinh()
}

/// Tanh-sinh rule on `[0, 1]` with step `2^-level` over `|t| <= t_max`:
/// `x = 1/(1 + e^{-π sinh t})`. The returned weight is the bare step times
/// `π cosh t`; multiply by `x (1 - x)` for Lebesgue measure.
pub fn tanh_sinh(level: u32, t_max: f64) -> Vec<Node> {
    let h = 0.5f64.powi(level as i32);
    let steps = (t_max / h).floor() as i64;
    (-steps..=steps)
        .map(|i| {
            let t = i as f64 * h;
            let s = std::f64::consts::PI * t.sinh();
            Node { x: 1.0 / (1.0 + (-s).exp()), xc: 1.0 / (1.0 + s.exp()), w: h * std::f64::consts::PI * t.cosh() }
        })
        .collect()
}

/// Tanh-sinh rule for the Beta(`a`, `b`) probability law: the density is
/// folded into the weights as `x^a (1-x)^b / B(a, b)`, which stays finite
/// for every `a, b > 0`.
pub fn tanh_sinh_beta(a: f64, b: f64, level: u32, t_max: f64) -> Vec<Node> {
    let ln_b = ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b);
    tanh_sinh(level, t_max)
        .into_iter()
        .map(|nd| Node { w: nd.w * (a * nd.x.ln() + b * nd.xc.ln() - ln_b).exp(), ..nd })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::beta;

    fn beta_moment(a: f64, b: f64, p: i32) -> f64 {
        beta(a + p as f64, b) / beta(a, b)
    }

    #[test]
    fn gauss_jacobi_integrates_polynomials_exactly() {
        for &(a, b) in &[(1.0, 1.0), (0.5, 2.0), (2.5, 0.3), (1.0, 4.0), (0.5, 0.5)] {
            let m = 6;
            let rule = gauss_jacobi_beta(a, b, m);
            for p in 0..(2 * m as i32) {
                let q: f64 = rule.iter().map(|n| n.w * n.x.powi(p)).sum();
                let want = beta_moment(a, b, p);
                assert!((q - want).abs() < 1e-13 * want.max(1e-300), "a={a} b={b} p={p}: {q} {want}");
            }
            assert!(rule.iter().all(|n| n.x > 0.0 && n.x < 1.0 && (n.x + n.xc - 1.0).abs() < 1e-15));
        }
    }

    #[test]
    fn tanh_sinh_handles_endpoint_singularities() {
        let t_max = tanh_sinh_extent(f64::MIN_POSITIVE);
        for &(a, b) in &[(0.3, 0.7), (0.5, 0.5), (1.0, 1.0), (2.0, 0.2)] {
            let q: f64 = tanh_sinh_beta(a, b, 5, t_max).iter().map(|n| n.w).sum();
            assert!((q - 1.0).abs() < 1e-12, "a={a} b={b}: {q}");
            let m1: f64 = tanh_sinh_beta(a, b, 5, t_max).iter().map(|n| n.w * n.x).sum();
            assert!((m1 - a / (a + b)).abs() < 1e-12);
        }
        let lebesgue: f64 = tanh_sinh(4, t_max).iter().map(|n| n.w * n.x * n.xc / n.x.sqrt()).sum();
        assert!((lebesgue - 2.0).abs() < 1e-12, "{lebesgue}");
    }
}
