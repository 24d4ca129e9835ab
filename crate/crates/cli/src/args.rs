use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use dihedral_bessel::{QuadratureScheme, DEFAULT_SEED};

/// Generalized Bessel functions of the dihedral groups.
///
/// Points are `radius,angle` pairs unless `--cartesian` is given. Set
/// `RAYON_NUM_THREADS` to bound the worker threads; results do not depend on it.
#[derive(Debug, Parser)]
#[command(name = "dbessel", version)]
pub struct Cli {
    /// Seed for every random choice (Monte Carlo samples, random test points).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate D_k(x, y) with one representation.
    Eval(EvalArgs),
    /// Compare representations on a grid of groups, multiplicities and points.
    Crosscheck(CrosscheckArgs),
    /// Run an identity verification suite.
    Identity(IdentityArgs),
    /// Tabulate the Laplace density and report where it is supported.
    Density(DensityArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Method {
    Gegenbauer,
    Horn,
    Simplex,
    Boundary,
    Laplace,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Gegenbauer => "gegenbauer",
            Method::Horn => "horn",
            Method::Simplex => "simplex",
            Method::Boundary => "boundary",
            Method::Laplace => "laplace",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeKind {
    MonteCarlo,
    Product,
    TanhSinh,
}

#[derive(Debug, Clone, Args)]
pub struct SchemeArgs {
    /// Quadrature over the simplex.
    #[arg(long, value_enum)]
    pub scheme: Option<SchemeKind>,
    /// Monte Carlo sample count.
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    /// Gauss–Jacobi nodes per coordinate for the product rule.
    #[arg(long, default_value_t = 24)]
    pub order: usize,
    /// Tanh-sinh refinement level (step 2^-level).
    #[arg(long, default_value_t = 4)]
    pub level: u32,
}

impl SchemeArgs {
    pub fn resolve(&self, default: SchemeKind, seed: u64) -> QuadratureScheme {
        match self.scheme.unwrap_or(default) {
            SchemeKind::MonteCarlo => QuadratureScheme::MonteCarlo { samples: self.samples, seed },
            SchemeKind::Product => QuadratureScheme::Product { order: self.order },
            SchemeKind::TanhSinh => QuadratureScheme::TanhSinh { level: self.level },
        }
    }
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("group").required(true).args(["n", "p"])))]
pub struct EvalArgs {
    /// Order parameter n of the dihedral group D₂(n).
    #[arg(long)]
    pub n: Option<usize>,
    /// Half order p of an even group D₂(2p).
    #[arg(long)]
    pub p: Option<usize>,
    /// Multiplicity.
    #[arg(long)]
    pub k: f64,
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub x: (f64, f64),
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub y: (f64, f64),
    /// Read points as cartesian `x1,x2`.
    #[arg(long)]
    pub cartesian: bool,
    #[arg(long, value_enum, default_value_t = Method::Gegenbauer)]
    pub method: Method,
    #[command(flatten)]
    pub scheme: SchemeArgs,
    /// Print a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CrosscheckArgs {
    /// Group orders.
    #[arg(long, value_delimiter = ',', default_values_t = [3usize, 4, 5])]
    pub n: Vec<usize>,
    /// Multiplicities.
    #[arg(long, value_delimiter = ',', default_values_t = [0.5, 1.0, 2.0])]
    pub k: Vec<f64>,
    /// Random point pairs per (n, k).
    #[arg(long, default_value_t = 5)]
    pub points: usize,
    /// Largest radius of a random point.
    #[arg(long, default_value_t = 1.5)]
    pub max_radius: f64,
    /// Representations to compare pairwise (at least two).
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Method::Gegenbauer, Method::Horn, Method::Simplex])]
    pub methods: Vec<Method>,
    /// Relative tolerance between deterministic methods.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Relative floor of the tolerance when a Monte Carlo value is involved;
    /// the tolerance is the larger of this and three combined standard errors.
    #[arg(long, default_value_t = 1e-2)]
    pub mc_tol: f64,
    #[command(flatten)]
    pub scheme: SchemeArgs,
    /// Write the CSV here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print a JSON summary.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct IdentityArgs {
    /// Suite name (sN, idgeg, poisson, factorization, dirichlet, altsum,
    /// duplication, 2f1closed, diskbessel) or `all`.
    #[arg(long)]
    pub which: String,
    /// Print a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct DensityArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub k: f64,
    #[arg(long, default_value_t = 1.0)]
    pub rho: f64,
    /// Nodes per axis.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4001))]
    pub grid: u32,
    /// Half width of the square grid; defaults to 1.2 rho.
    #[arg(long)]
    pub extent: Option<f64>,
    #[command(flatten)]
    pub scheme: SchemeArgs,
    /// Output file; `.json` selects JSON, anything else CSV.
    #[arg(long)]
    pub out: PathBuf,
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two comma-separated numbers, got '{s}'"))?;
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}"));
    let pair = (num(a)?, num(b)?);
    if !pair.0.is_finite() || !pair.1.is_finite() {
        return Err(format!("coordinates must be finite, got '{s}'"));
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs() {
        assert_eq!(parse_pair("1,-0.5"), Ok((1.0, -0.5)));
        assert_eq!(parse_pair(" 2 , 3 "), Ok((2.0, 3.0)));
        assert!(parse_pair("1").is_err());
        assert!(parse_pair("1,x").is_err());
        assert!(parse_pair("1,inf").is_err());
    }

    #[test]
    fn command_line_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
