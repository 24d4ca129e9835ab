use serde::Serialize;

use super::EvenDihedralParams;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::simplex::SimplexPoint;

/// `a(u), b(u), c(u)` with `a² = 1 + S_re`, `ab = S_im`,
/// `(ac)² = 1 - S_re² - S_im²`, where `S = Σ u_s e^{-2iπs/p}`.
///
/// The products `ab` and `ac` are always defined; `b` and `c` are absent
/// when `a` vanishes to working precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ABCCoeffs<T> {
    pub a: T,
    pub b: Option<T>,
    pub c: Option<T>,
    pub ab: T,
    pub ac: T,
    pub degenerate: bool,
}

/// Radicand tolerance below which a negative value means corrupt input.
const RADICAND_SLACK: f64 = 1e-12;

pub fn abc<T: Real>(params: &EvenDihedralParams<T>, u: &SimplexPoint) -> Result<ABCCoeffs<T>> {
    if u.dim() != params.p() {
        return Err(Error::InvalidParameter(format!(
            "simplex point has {} coordinates, p = {} needs {}",
            u.dim(),
            params.p(),
            params.p()
        )));
    }
    let full: Vec<T> = u.full().iter().map(|&x| T::from_f64(x).unwrap_or_else(T::zero)).collect();
    let (a2, im, rad) = params.stable_parts(&full);
    let a2 = a2.max(T::zero());
    if rad < -T::lit(RADICAND_SLACK) {
        return Err(Error::NegativeRadicand(rad.to_f64_lossy()));
    }
    let ac = rad.max(T::zero()).sqrt();
    let a = a2.sqrt();
    let degenerate = a2 <= T::epsilon();
    Ok(ABCCoeffs {
        a,
        b: (!degenerate).then(|| im / a),
        c: (!degenerate).then(|| ac / a),
        ab: im,
        ac,
        degenerate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let p3 = EvenDihedralParams::new(3, 1.0_f64).unwrap();
        let r = abc(&p3, &SimplexPoint::new(&[0.0, 0.0]).unwrap()).unwrap();
        assert!((r.a - 2f64.sqrt()).abs() < 1e-15 && r.b == Some(0.0) && r.c == Some(0.0));

        let p2 = EvenDihedralParams::new(2, 1.0_f64).unwrap();
        let r = abc(&p2, &SimplexPoint::new(&[1.0]).unwrap()).unwrap();
        assert!(r.degenerate && r.a == 0.0 && r.b.is_none());

        let third = 1.0 / 3.0;
        let r = abc(&p3, &SimplexPoint::from_full(vec![third, third, third]).unwrap()).unwrap();
        assert!((r.ac - 1.0).abs() < 1e-15);
    }

    #[test]
    fn products_are_consistent() {
        let p = EvenDihedralParams::new(5, 0.7_f64).unwrap();
        let u = SimplexPoint::new(&[0.1, 0.25, 0.05, 0.3]).unwrap();
        let r = abc(&p, &u).unwrap();
        let (re, im) = p.moment(u.full());
        assert!((r.a * r.a - 1.0 - re).abs() < 1e-15);
        assert!((r.a * r.b.unwrap() - im).abs() < 1e-15);
        assert!((r.b.unwrap().powi(2) + r.c.unwrap().powi(2) - (1.0 - re)).abs() < 1e-14);
    }

    #[test]
    fn wrong_dimension_rejected() {
        let p = EvenDihedralParams::new(3, 1.0_f64).unwrap();
        assert!(abc(&p, &SimplexPoint::new(&[0.5]).unwrap()).is_err());
    }
}
