use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};
use rayon::prelude::*;

use super::rules::{gauss_jacobi_beta, tanh_sinh_beta, tanh_sinh_extent, Node};
use super::{QuadratureScheme, SimplexPoint, MAX_RULE_NODES};
use crate::config::EvalResult;
use crate::error::{invalid, Error, Result};
use crate::scalar::Real;
use crate::summation::{Accumulator, Summation};

/// Samples per random stream.
pub const MC_CHUNK: usize = 1 << 14;

fn check_alphas(alphas: &[f64]) -> Result<()> {
    if alphas.is_empty() {
        return Err(invalid("Dirichlet law needs at least one parameter"));
    }
    if let Some(a) = alphas.iter().find(|&&a| !(a > 0.0) || !a.is_finite()) {
        return Err(invalid(format!("Dirichlet parameters must be positive and finite, got {a}")));
    }
    Ok(())
}

fn stream(seed: u64, chunk: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk as u64);
    rng
}

struct DirichletDraw {
    gammas: Vec<Gamma<f64>>,
}

impl DirichletDraw {
    fn new(alphas: &[f64]) -> Self {
        Self { gammas: alphas.iter().map(|&a| Gamma::new(a, 1.0).expect("positive shape")).collect() }
    }

    fn fill(&self, rng: &mut ChaCha8Rng, out: &mut [f64]) {
        loop {
            let mut total = 0.0;
            for (o, g) in out.iter_mut().zip(&self.gammas) {
                *o = g.sample(rng);
                total += *o;
            }
            if total > 0.0 && total.is_finite() {
                out.iter_mut().for_each(|o| *o /= total);
                return;
            }
        }
    }
}

/// `count` Dirichlet(`alphas`) points; reproducible for a given seed and
/// identical to the points seen by [`integrate_dirichlet`] under Monte Carlo.
pub fn dirichlet_sample(alphas: &[f64], count: usize, seed: u64) -> Result<Vec<SimplexPoint>> {
    check_alphas(alphas)?;
    let draw = DirichletDraw::new(alphas);
    let chunks = count.div_ceil(MC_CHUNK);
    let blocks: Vec<Vec<SimplexPoint>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = stream(seed, c);
            let len = MC_CHUNK.min(count - c * MC_CHUNK);
            let mut buf = vec![0.0; alphas.len()];
            (0..len)
                .map(|_| {
                    draw.fill(&mut rng, &mut buf);
                    SimplexPoint::from_raw(&buf)
                })
                .collect()
        })
        .collect();
    Ok(blocks.into_iter().flatten().collect())
}

/// Running mean and centred second moment.
#[derive(Debug, Clone, Copy)]
struct Moments<T> {
    n: usize,
    mean: T,
    m2: T,
}

impl<T: Real> Moments<T> {
    fn empty() -> Self {
        Self { n: 0, mean: T::zero(), m2: T::zero() }
    }

    fn push(&mut self, x: T) {
        self.n += 1;
        let d = x - self.mean;
        self.mean = self.mean + d / T::of(self.n);
        self.m2 = self.m2 + d * (x - self.mean);
    }

    fn merge(a: Self, b: Self) -> Self {
        if a.n == 0 {
            return b;
        }
        if b.n == 0 {
            return a;
        }
        let n = a.n + b.n;
        let (na, nb, nf) = (T::of(a.n), T::of(b.n), T::of(n));
        let d = b.mean - a.mean;
        Self { n, mean: a.mean + d * nb / nf, m2: a.m2 + b.m2 + d * d * na * nb / nf }
    }
}

/// Fixed-shape pairwise reduction.
fn tree<S: Copy>(items: &[S], merge: &impl Fn(S, S) -> S) -> Option<S> {
    match items.len() {
        0 => None,
        1 => Some(items[0]),
        len => {
            let (l, r) = items.split_at(len / 2);
            Some(merge(tree(l, merge)?, tree(r, merge)?))
        }
    }
}

/// `E[f(u)]` for `u ~ Dirichlet(alphas)`, where `f` receives
/// `(u₁, …, u_{n-1}, u₀)` and `alphas` follows the same order.
pub fn integrate_dirichlet<T, F>(alphas: &[f64], scheme: &QuadratureScheme, f: F) -> Result<EvalResult<T>>
where
    T: Real,
    F: Fn(&[f64]) -> T + Sync,
{
    check_alphas(alphas)?;
    scheme.validate()?;
    let out = match *scheme {
        QuadratureScheme::MonteCarlo { samples, seed } => monte_carlo(alphas, samples, seed, &f),
        QuadratureScheme::Product { order } => {
            let fine = product(alphas, &|a, b| gauss_jacobi_beta(a, b, order), &f)?;
            let error = if order > 1 {
                let coarse = product(alphas, &|a, b| gauss_jacobi_beta(a, b, order.div_ceil(2)), &f)?;
                (fine.0 - coarse.0).abs()
            } else {
                fine.0.abs()
            };
            EvalResult { value: fine.0, error, terms_used: 0, samples_used: fine.1 }
        }
        QuadratureScheme::TanhSinh { level } => {
            let t_max = tanh_sinh_extent(T::min_positive_value().to_f64_lossy());
            let fine = product(alphas, &|a, b| tanh_sinh_beta(a, b, level, t_max), &f)?;
            let error = if level > 0 {
                let coarse = product(alphas, &|a, b| tanh_sinh_beta(a, b, level - 1, t_max), &f)?;
                (fine.0 - coarse.0).abs()
            } else {
                fine.0.abs()
            };
            EvalResult { value: fine.0, error, terms_used: 0, samples_used: fine.1 }
        }
    };
    if !out.value.is_finite() {
        return Err(Error::NonFinite("simplex integrand"));
    }
    Ok(out)
}

fn monte_carlo<T: Real, F: Fn(&[f64]) -> T + Sync>(alphas: &[f64], samples: usize, seed: u64, f: &F) -> EvalResult<T> {
    let draw = DirichletDraw::new(alphas);
    let dim = alphas.len();
    monte_carlo_mean(samples, seed, || vec![0.0; dim], |rng, buf| {
        draw.fill(rng, buf);
        f(buf)
    })
}

/// Mean and standard error of `draw` over `samples` calls, with block `c`
/// of [`MC_CHUNK`] calls fed by stream `c` of the seeded generator and the
/// block statistics merged in a fixed pairwise order.
pub(crate) fn monte_carlo_mean<T, S, I, D>(samples: usize, seed: u64, init: I, draw: D) -> EvalResult<T>
where
    T: Real,
    I: Fn() -> S + Sync,
    D: Fn(&mut ChaCha8Rng, &mut S) -> T + Sync,
{
    let chunks = samples.div_ceil(MC_CHUNK);
    let parts: Vec<Moments<T>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = stream(seed, c);
            let mut scratch = init();
            let len = MC_CHUNK.min(samples - c * MC_CHUNK);
            let mut m = Moments::empty();
            for _ in 0..len {
                m.push(draw(&mut rng, &mut scratch));
            }
            m
        })
        .collect();
    let m = tree(&parts, &Moments::merge).unwrap_or_else(Moments::empty);
    let var = if m.n > 1 { m.m2 / T::of(m.n - 1) } else { T::zero() };
    EvalResult { value: m.mean, error: (var / T::of(m.n)).sqrt(), terms_used: 0, samples_used: m.n }
}

/// Iterated rule over the stick-breaking coordinates: the `i`-th break
/// `x_i ~ Beta(α_i, Σ_{j>i} α_j)` gives `u_i = x_i ∏_{l<i}(1 - x_l)`.
fn product<T, F>(alphas: &[f64], rule: &dyn Fn(f64, f64) -> Vec<Node>, f: &F) -> Result<(T, usize)>
where
    T: Real,
    F: Fn(&[f64]) -> T + Sync,
{
    let m = alphas.len();
    let rules: Vec<Vec<Node>> = (0..m.saturating_sub(1))
        .map(|i| rule(alphas[i], alphas[i + 1..].iter().sum()))
        .collect();
    let nodes = rules.iter().try_fold(1u64, |acc, r| acc.checked_mul(r.len() as u64)).unwrap_or(u64::MAX);
    if nodes > MAX_RULE_NODES {
        return Err(Error::UnsupportedScheme(format!(
            "deterministic rule needs {nodes} nodes in dimension {}, above {MAX_RULE_NODES}; use Monte Carlo",
            m - 1
        )));
    }
    if rules.is_empty() {
        return Ok((f(&[1.0]), 1));
    }
    let parts: Vec<T> = rules[0]
        .par_iter()
        .map(|nd| {
            let mut buf = vec![0.0; m];
            buf[0] = nd.x;
            let mut acc = Accumulator::new(Summation::Compensated);
            nest(&rules, 1, nd.xc, nd.w, &mut buf, f, &mut acc);
            acc.value()
        })
        .collect();
    let total = tree(&parts, &|a, b| a + b).expect("nonempty rule");
    Ok((total, nodes as usize))
}

fn nest<T: Real, F: Fn(&[f64]) -> T>(
    rules: &[Vec<Node>],
    d: usize,
    rem: f64,
    weight: f64,
    buf: &mut [f64],
    f: &F,
    acc: &mut Accumulator<T>,
) {
    if d == rules.len() {
        buf[d] = rem;
        let w = T::from_f64(weight).unwrap_or_else(T::zero);
        if w != T::zero() {
            acc.add(w * f(buf));
        }
        return;
    }
    for nd in &rules[d] {
        buf[d] = rem * nd.x;
        nest(rules, d + 1, rem * nd.xc, weight * nd.w, buf, f, acc);
    }
}
