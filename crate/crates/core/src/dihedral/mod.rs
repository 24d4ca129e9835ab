//! Dihedral groups `D₂(n)` with constant multiplicity: parameters, the
//! finite sums `S_N`, and the Gegenbauer and Horn series for `D_k`.

pub mod identities;
mod params;
mod series;
mod sums;

pub use params::{wedge_reduce, BCoeffs, DihedralParams, PolarPoint};
pub use series::{boundary_horn, eval_gegenbauer_series, eval_horn_series, normalization_defect};
pub use sums::{s_n_boundary, s_n_closed, s_n_direct, Compositions};
