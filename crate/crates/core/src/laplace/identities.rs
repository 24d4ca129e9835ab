//! Disk integral identity for the normalized Bessel function.

use super::disk::disk_bessel_identity;
use crate::error::Result;
use crate::simplex::QuadratureScheme;
use crate::suite::{SuiteCheck, SuiteOutcome};

pub const DISK_TOL: f64 = 1e-6;
pub const DISK_EXPONENTS: [f64; 4] = [0.8, 1.0, 1.5, 2.5];
pub const DISK_RADII: [f64; 5] = [0.0, 0.5, 1.0, 2.0, 4.0];

/// `K ∫_{|z|<1} e^{⟨w,z⟩}(1-|z|²)^{pk-3/2} dz = i_{pk-1/2}(|w|)` over the
/// grid of exponents and radii, at eight directions of `w`, under both the
/// tanh-sinh and the Gauss–Jacobi radial rule.
pub fn disk_bessel_suite(_seed: u64) -> Result<SuiteOutcome> {
    let mut tanh = SuiteCheck::new("disk integral vs i_nu, tanh-sinh radial", DISK_TOL);
    let mut jacobi = SuiteCheck::new("disk integral vs i_nu, Gauss-Jacobi radial", DISK_TOL);
    for &pk in &DISK_EXPONENTS {
        for &r in &DISK_RADII {
            for d in 0..8 {
                let ang = d as f64 * std::f64::consts::PI / 4.0 + 0.1;
                let w = (r * ang.cos(), r * ang.sin());
                tanh.record(disk_bessel_identity(pk, w, &QuadratureScheme::TanhSinh { level: 5 })?);
                jacobi.record(disk_bessel_identity(pk, w, &QuadratureScheme::Product { order: 20 })?);
            }
        }
    }
    Ok(SuiteOutcome { name: "diskbessel", checks: vec![tanh, jacobi] })
}
