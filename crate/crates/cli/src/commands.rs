use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use dihedral_bessel::{
    eval_boundary_bessel, eval_gegenbauer_series, eval_horn_series, eval_laplace, eval_simplex_integral, support_probe,
    wedge_reduce, Config, Dihedral, Error, EvenDihedral, GridSpec, Identity, Polar, QuadratureScheme, Value,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::args::{CrosscheckArgs, DensityArgs, EvalArgs, IdentityArgs, Method, SchemeKind};

const SCHEMA: u32 = 1;
const TOLERANCE_FAILURE: u8 = 3;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Numeric(Error),
    Io(io::Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Numeric(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::UnsupportedScheme(_) => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn point((a, b): (f64, f64), cartesian: bool) -> Polar {
    if cartesian {
        Polar::from_cartesian(a, b)
    } else {
        Polar::new(a, b)
    }
}

fn print_json(v: &serde_json::Value) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)
}

/// One representation at one point; `n` is the group order.
fn evaluate(method: Method, n: usize, k: f64, x: Polar, y: Polar, scheme: &QuadratureScheme) -> Result<Value, Failure> {
    let cfg = Config::default();
    match method {
        Method::Gegenbauer => Ok(eval_gegenbauer_series(&Dihedral::new(n, k)?, x, y, &cfg)?),
        Method::Horn => Ok(eval_horn_series(&Dihedral::new(n, k)?, x, y, &cfg)?),
        Method::Simplex => Ok(eval_simplex_integral(&Dihedral::new(n, k)?, x, y, scheme)?),
        Method::Boundary | Method::Laplace => {
            if !n.is_multiple_of(2) {
                return Err(usage(format!("method={} requires an even group, got n = {n}", method.name())));
            }
            let reduced = wedge_reduce(x, n);
            if reduced.radius > 0.0 && reduced.angle.abs() > 1e-12 {
                return Err(usage(format!(
                    "method={} requires phi=0 (x on the wedge boundary), got phi = {} after reduction",
                    method.name(),
                    reduced.angle
                )));
            }
            let ev = EvenDihedral::new(n / 2, k)?;
            if method == Method::Boundary {
                Ok(eval_boundary_bessel(&ev, x.radius, y, scheme)?)
            } else {
                Ok(eval_laplace(&ev, x.radius, y, scheme)?)
            }
        }
    }
}

pub fn eval(a: &EvalArgs, seed: u64) -> Outcome {
    let started = Instant::now();
    let n = match (a.n, a.p) {
        (Some(n), _) => n,
        (None, Some(p)) => 2 * p,
        (None, None) => unreachable!("clap requires --n or --p"),
    };
    let (x, y) = (point(a.x, a.cartesian), point(a.y, a.cartesian));
    let scheme = a.scheme.resolve(SchemeKind::Product, seed);
    let v = evaluate(a.method, n, a.k, x, y, &scheme)?;
    if a.json {
        print_json(&json!({
            "schema": SCHEMA,
            "command": "eval",
            "params": {
                "n": n,
                "k": a.k,
                "x": {"radius": x.radius, "angle": x.angle},
                "y": {"radius": y.radius, "angle": y.angle},
                "scheme": scheme,
                "seed": seed,
            },
            "method": a.method.name(),
            "value": v.value,
            "error": v.error,
            "terms_used": v.terms_used,
            "samples_used": v.samples_used,
            "passed": true,
            "wall_time_s": started.elapsed().as_secs_f64(),
        }))?;
    } else {
        println!("method  {}", a.method.name());
        println!("value   {:.16e}", v.value);
        println!("error   {:.3e}", v.error);
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Debug, Serialize)]
struct Comparison {
    n: usize,
    k: f64,
    point: usize,
    x_radius: f64,
    x_angle: f64,
    y_radius: f64,
    y_angle: f64,
    method_a: &'static str,
    method_b: &'static str,
    value_a: f64,
    value_b: f64,
    deviation: f64,
    tolerance: f64,
    passed: bool,
}

pub fn crosscheck(a: &CrosscheckArgs, seed: u64) -> Outcome {
    let started = Instant::now();
    let mut methods = a.methods.clone();
    methods.sort();
    methods.dedup();
    if methods.len() < 2 {
        return Err(usage("crosscheck needs at least two distinct methods"));
    }
    if let Some(m) = methods.iter().find(|m| matches!(m, Method::Boundary | Method::Laplace)) {
        return Err(usage(format!("method={} is not available in crosscheck; use eval", m.name())));
    }
    if a.points == 0 || a.n.is_empty() || a.k.is_empty() {
        return Err(usage("crosscheck needs at least one order, one multiplicity and one point"));
    }
    if !(a.max_radius > 0.0) || !a.max_radius.is_finite() {
        return Err(usage(format!("--max-radius must be positive, got {}", a.max_radius)));
    }
    let mut ns = a.n.clone();
    ns.sort();
    ns.dedup();
    let mut ks = a.k.clone();
    ks.sort_by(f64::total_cmp);
    ks.dedup();
    let scheme = a.scheme.resolve(SchemeKind::MonteCarlo, seed);

    let cases: Vec<(usize, f64, usize)> = ns
        .iter()
        .flat_map(|&n| ks.iter().flat_map(move |&k| (0..a.points).map(move |i| (n, k, i))))
        .collect();
    let rows: Vec<Result<Vec<Comparison>, Failure>> = cases
        .par_iter()
        .enumerate()
        .map(|(case, &(n, k, i))| {
            let mut r = ChaCha8Rng::seed_from_u64(seed);
            r.set_stream(case as u64);
            let x = Polar::new(r.random_range(0.0..a.max_radius), r.random_range(0.0..std::f64::consts::TAU));
            let y = Polar::new(r.random_range(0.0..a.max_radius), r.random_range(0.0..std::f64::consts::TAU));
            let values: Vec<(Method, Value)> = methods
                .iter()
                .map(|&m| evaluate(m, n, k, x, y, &scheme).map(|v| (m, v)))
                .collect::<Result<_, _>>()?;
            let mut out = Vec::new();
            for (ia, (ma, va)) in values.iter().enumerate() {
                for (mb, vb) in &values[ia + 1..] {
                    let stochastic = [ma, mb].iter().any(|&&m| m == Method::Simplex) && scheme.is_monte_carlo();
                    let scale = vb.value.abs().max(f64::MIN_POSITIVE);
                    let deviation = (va.value - vb.value).abs() / scale;
                    let tolerance = if stochastic {
                        (3.0 * va.error.hypot(vb.error) / scale).max(a.mc_tol)
                    } else {
                        a.tol
                    };
                    out.push(Comparison {
                        n,
                        k,
                        point: i,
                        x_radius: x.radius,
                        x_angle: x.angle,
                        y_radius: y.radius,
                        y_angle: y.angle,
                        method_a: ma.name(),
                        method_b: mb.name(),
                        value_a: va.value,
                        value_b: vb.value,
                        deviation,
                        tolerance,
                        passed: deviation <= tolerance,
                    });
                }
            }
            Ok(out)
        })
        .collect();
    let mut comparisons = Vec::new();
    for r in rows {
        comparisons.extend(r?);
    }

    match &a.out {
        Some(path) => write_comparisons(File::create(path)?, &comparisons)?,
        None => write_comparisons(io::stdout().lock(), &comparisons)?,
    }
    let failed: Vec<&Comparison> = comparisons.iter().filter(|c| !c.passed).collect();
    let worst = comparisons.iter().map(|c| c.deviation / c.tolerance).fold(0.0, f64::max);
    if a.json {
        print_json(&json!({
            "schema": SCHEMA,
            "command": "crosscheck",
            "params": {"n": ns, "k": ks, "points": a.points, "max_radius": a.max_radius, "scheme": scheme, "seed": seed},
            "method": methods.iter().map(|m| m.name()).collect::<Vec<_>>(),
            "value": worst,
            "error": serde_json::Value::Null,
            "comparisons": comparisons.len(),
            "failures": failed,
            "passed": failed.is_empty(),
            "wall_time_s": started.elapsed().as_secs_f64(),
        }))?;
    } else {
        let mut err = io::stderr().lock();
        for c in &failed {
            writeln!(
                err,
                "FAIL n={} k={} point={} {} vs {}: deviation {:.3e} > tolerance {:.3e}",
                c.n, c.k, c.point, c.method_a, c.method_b, c.deviation, c.tolerance
            )?;
        }
        writeln!(
            err,
            "{} comparisons, {} failed, max deviation/tolerance {:.3}",
            comparisons.len(),
            failed.len(),
            worst
        )?;
    }
    Ok(if failed.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(TOLERANCE_FAILURE) })
}

fn write_comparisons<W: Write>(out: W, rows: &[Comparison]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "n", "k", "point", "x_radius", "x_angle", "y_radius", "y_angle", "method_a", "method_b", "value_a", "value_b",
        "deviation", "tolerance", "passed",
    ])?;
    let e = |v: f64| format!("{v:.12e}");
    for c in rows {
        w.write_record([
            c.n.to_string(),
            c.k.to_string(),
            c.point.to_string(),
            e(c.x_radius),
            e(c.x_angle),
            e(c.y_radius),
            e(c.y_angle),
            c.method_a.to_string(),
            c.method_b.to_string(),
            e(c.value_a),
            e(c.value_b),
            format!("{:.3e}", c.deviation),
            format!("{:.3e}", c.tolerance),
            c.passed.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn identity(a: &IdentityArgs, seed: u64) -> Outcome {
    let started = Instant::now();
    let which: Vec<Identity> = if a.which.eq_ignore_ascii_case("all") {
        Identity::ALL.to_vec()
    } else {
        vec![Identity::from_str(&a.which).map_err(usage)?]
    };
    let outcomes = which.iter().map(|w| w.run(seed)).collect::<Result<Vec<_>, _>>()?;
    let passed = outcomes.iter().all(|o| o.passed());
    if a.json {
        print_json(&json!({
            "schema": SCHEMA,
            "command": "identity",
            "params": {"which": which.iter().map(|w| w.name()).collect::<Vec<_>>(), "seed": seed},
            "method": "identity-suite",
            "value": outcomes.iter().map(|o| o.max_deviation()).fold(0.0, f64::max),
            "error": serde_json::Value::Null,
            "suites": outcomes,
            "passed": passed,
            "wall_time_s": started.elapsed().as_secs_f64(),
        }))?;
    } else {
        for o in &outcomes {
            print!("{o}");
        }
    }
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(TOLERANCE_FAILURE) })
}

pub fn density(a: &DensityArgs, seed: u64) -> Outcome {
    let ev = EvenDihedral::new(a.p, a.k)?;
    ev.require_density()?;
    if !(a.rho > 0.0) || !a.rho.is_finite() {
        return Err(usage(format!("--rho must be positive, got {}", a.rho)));
    }
    let spec = GridSpec { extent: a.extent.unwrap_or(1.2 * a.rho), resolution: a.grid as usize };
    let scheme = a.scheme.resolve(SchemeKind::TanhSinh, seed);
    let grid = support_probe(&ev, a.rho, spec, &scheme)?;
    write_grid(&a.out, &grid)?;
    let r = &grid.report;
    println!("nodes                    {}", spec.len());
    println!("support floor            {:.0e}", r.floor);
    println!("support nodes            {}", r.support_nodes);
    println!("max |z| above floor      {:.6}", r.max_support_radius);
    println!("nonzero with |z| > rho   {}", r.outside_disk_nonzero);
    println!("within disk              {}", r.within_disk);
    println!("above floor outside hull {}", r.outside_hull_nonzero);
    println!("within orbit hull        {}", r.within_hull);
    Ok(if r.within_disk { ExitCode::SUCCESS } else { ExitCode::from(TOLERANCE_FAILURE) })
}

fn write_grid(path: &Path, grid: &dihedral_bessel::DensityGrid) -> Result<(), Failure> {
    let file = BufWriter::new(File::create(path)?);
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) {
        let mut file = file;
        serde_json::to_writer_pretty(&mut file, &grid.to_json()).map_err(io::Error::from)?;
        writeln!(file)?;
        file.flush()?;
    } else {
        grid.write_csv(file)?;
    }
    Ok(())
}
