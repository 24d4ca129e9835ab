//! Generalized Bessel function `D_k` of the dihedral group `D₂(n)` with
//! constant multiplicity `k`, normalized by `D_k(0, y) = 1`.
//!
//! Four representations are provided so that each can check the others:
//!
//! * [`eval_gegenbauer_series`]: polar expansion in Gegenbauer polynomials
//!   and Bessel functions.
//! * [`eval_horn_series`]: series of confluent Horn functions `Φ₂⁽ⁿ⁾`.
//! * [`eval_simplex_integral`]: integral over the simplex `Σ_n` with a
//!   `₀F_{n-1}` kernel.
//! * For even groups `n = 2p`: [`eval_boundary_bessel`] (normalized Bessel
//!   function averaged over `Σ_p`) and [`eval_laplace`] (Laplace-type
//!   density [`density_h`]).
//!
//! All numerics are generic over [`Real`] (`f32` or `f64`); the aliases at
//! the crate root fix `f64`.

pub mod config;
pub mod dihedral;
pub mod error;
pub mod laplace;
pub mod scalar;
pub mod simplex;
pub mod special;
pub mod suite;
pub mod summation;

pub use config::{EvalConfig, EvalResult, DEFAULT_SEED};
pub use dihedral::{
    boundary_horn, eval_gegenbauer_series, eval_horn_series, s_n_boundary, s_n_closed, s_n_direct, wedge_reduce,
    BCoeffs, DihedralParams, PolarPoint,
};
pub use error::{Error, Result};
pub use laplace::{
    abc, density_h, disk_bessel_identity, disk_integral, eval_boundary_bessel, eval_laplace, support_probe,
    ABCCoeffs, DensityGrid, EvenDihedralParams, GridSpec,
};
pub use scalar::Real;
pub use simplex::{
    dirichlet_moment_check, dirichlet_sample, eval_simplex_integral, integrate_dirichlet, QuadratureScheme,
    SimplexPoint,
};
pub use suite::{Identity, SuiteOutcome};
pub use summation::Summation;

pub type Dihedral = DihedralParams<f64>;
pub type EvenDihedral = EvenDihedralParams<f64>;
pub type Polar = PolarPoint<f64>;
pub type Config = EvalConfig<f64>;
pub type Value = EvalResult<f64>;

pub type Dihedral32 = DihedralParams<f32>;
pub type EvenDihedral32 = EvenDihedralParams<f32>;
pub type Polar32 = PolarPoint<f32>;
pub type Config32 = EvalConfig<f32>;
pub type Value32 = EvalResult<f32>;
