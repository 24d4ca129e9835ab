use std::f64::consts::PI;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::{density_h, EvenDihedralParams};
use crate::error::{invalid, Result};
use crate::simplex::QuadratureScheme;

/// Values above this count as support.
pub const SUPPORT_FLOOR: f64 = 1e-12;

/// Square grid `[-extent, extent]²` with `resolution` nodes per axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub extent: f64,
    pub resolution: usize,
}

impl GridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.resolution == 0 {
            return Err(invalid("grid resolution must be at least 1"));
        }
        if !(self.extent > 0.0) || !self.extent.is_finite() {
            return Err(invalid(format!("grid extent must be positive, got {}", self.extent)));
        }
        Ok(())
    }

    /// Coordinate of node `i` along an axis.
    pub fn coord(&self, i: usize) -> f64 {
        if self.resolution == 1 {
            0.0
        } else {
            -self.extent + 2.0 * self.extent * i as f64 / (self.resolution - 1) as f64
        }
    }

    /// Node `idx` in row-major order: `z₂` selects the row, `z₁` the column.
    pub fn node(&self, idx: usize) -> (f64, f64) {
        (self.coord(idx % self.resolution), self.coord(idx / self.resolution))
    }

    pub fn len(&self) -> usize {
        self.resolution * self.resolution
    }

    pub fn is_empty(&self) -> bool {
        self.resolution == 0
    }
}

/// Whether `z` lies in the convex hull of `{ρ e^{isπ/p}}`, a regular
/// `2p`-gon, up to `slack`.
pub fn in_orbit_hull(z: (f64, f64), rho: f64, p: usize, slack: f64) -> bool {
    let apothem = rho * (PI / (2 * p) as f64).cos();
    (0..2 * p).all(|s| {
        let ang = (s as f64 + 0.5) * PI / p as f64;
        z.0 * ang.cos() + z.1 * ang.sin() <= apothem + slack
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SupportReport {
    pub floor: f64,
    pub support_nodes: usize,
    /// Largest `|z|` with `H > floor`.
    pub max_support_radius: f64,
    pub outside_disk_nonzero: usize,
    /// Proven: all support lies in `|z| <= ρ`.
    pub within_disk: bool,
    pub outside_hull_nonzero: usize,
    /// Conjectured: all support lies in the orbit hull. Reported only.
    pub within_hull: bool,
}

/// Tabulated density with its support summary.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityGrid {
    pub p: usize,
    pub k: f64,
    pub rho: f64,
    pub spec: GridSpec,
    pub scheme: QuadratureScheme,
    /// Row-major, `z₂` rows, `z₁` columns.
    pub values: Vec<f64>,
    pub errors: Vec<f64>,
    /// Quadrature met the region `E_{z,ρ,p}` at this node.
    pub region_nonempty: Vec<bool>,
    pub in_hull: Vec<bool>,
    pub report: SupportReport,
}

/// Tabulates `H_p(ρ, ·)` on the grid and checks where it is supported.
pub fn support_probe(
    params: &EvenDihedralParams<f64>,
    rho: f64,
    spec: GridSpec,
    scheme: &QuadratureScheme,
) -> Result<DensityGrid> {
    spec.validate()?;
    params.require_density()?;
    let slack = 1e-12 * rho;
    let cells: Vec<Result<_>> = (0..spec.len())
        .into_par_iter()
        .map(|idx| {
            let z = spec.node(idx);
            density_h(params, rho, z, scheme).map(|h| (z, h))
        })
        .collect();
    let mut grid = DensityGrid {
        p: params.p(),
        k: params.k(),
        rho,
        spec,
        scheme: *scheme,
        values: Vec::with_capacity(spec.len()),
        errors: Vec::with_capacity(spec.len()),
        region_nonempty: Vec::with_capacity(spec.len()),
        in_hull: Vec::with_capacity(spec.len()),
        report: SupportReport {
            floor: SUPPORT_FLOOR,
            support_nodes: 0,
            max_support_radius: 0.0,
            outside_disk_nonzero: 0,
            within_disk: true,
            outside_hull_nonzero: 0,
            within_hull: true,
        },
    };
    for cell in cells {
        let (z, h) = cell?;
        let hull = in_orbit_hull(z, rho, params.p(), slack);
        let v = h.result.value;
        let radius = z.0.hypot(z.1);
        if radius > rho && v != 0.0 {
            grid.report.outside_disk_nonzero += 1;
        }
        if v > SUPPORT_FLOOR {
            grid.report.support_nodes += 1;
            grid.report.max_support_radius = grid.report.max_support_radius.max(radius);
            if !hull {
                grid.report.outside_hull_nonzero += 1;
            }
        }
        grid.values.push(v);
        grid.errors.push(h.result.error);
        grid.region_nonempty.push(h.region_nonempty);
        grid.in_hull.push(hull);
    }
    grid.report.within_disk = grid.report.outside_disk_nonzero == 0;
    grid.report.within_hull = grid.report.outside_hull_nonzero == 0;
    Ok(grid)
}

impl DensityGrid {
    /// CSV with header `z1,z2,H,in_hull_flag`, one row per node in
    /// row-major order.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["z1", "z2", "H", "in_hull_flag"])?;
        for idx in 0..self.spec.len() {
            let (z1, z2) = self.spec.node(idx);
            w.write_record([
                format!("{z1:.6}"),
                format!("{z2:.6}"),
                format!("{:.12e}", self.values[idx]),
                u8::from(self.in_hull[idx]).to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    /// JSON document with `"schema": 1`, the grid spec and row-major values.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "p": self.p,
            "k": self.k,
            "rho": self.rho,
            "grid": {
                "extent": self.spec.extent,
                "resolution": self.spec.resolution,
                "layout": "row-major, rows z2 ascending, columns z1 ascending",
            },
            "scheme": self.scheme,
            "values": self.values,
            "errors": self.errors,
            "region_nonempty": self.region_nonempty,
            "in_hull": self.in_hull,
            "report": self.report,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_membership() {
        // p = 2: the square with vertices (±1, 0), (0, ±1).
        assert!(in_orbit_hull((0.5, 0.49), 1.0, 2, 0.0));
        assert!(!in_orbit_hull((0.5, 0.51), 1.0, 2, 0.0));
        assert!(in_orbit_hull((1.0, 0.0), 1.0, 2, 1e-12));
        assert!(in_orbit_hull((0.0, 0.0), 1.0, 3, 0.0));
    }

    #[test]
    fn grid_layout() {
        let g = GridSpec { extent: 1.0, resolution: 3 };
        assert_eq!(g.node(0), (-1.0, -1.0));
        assert_eq!(g.node(1), (0.0, -1.0));
        assert_eq!(g.node(5), (1.0, 0.0));
        assert!(GridSpec { extent: 1.0, resolution: 0 }.validate().is_err());
    }

    #[test]
    fn small_probe_respects_the_disk() {
        let par = EvenDihedralParams::new(2, 1.0).unwrap();
        let g = support_probe(&par, 1.0, GridSpec { extent: 1.2, resolution: 9 }, &QuadratureScheme::TanhSinh { level: 3 })
            .unwrap();
        assert!(g.report.within_disk);
        assert_eq!(g.values.len(), 81);
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 82);
        assert!(text.starts_with("z1,z2,H,in_hull_flag"));
        assert_eq!(g.to_json()["schema"], 1);
    }
}
