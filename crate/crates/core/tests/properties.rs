use std::f64::consts::TAU;

use dihedral_bessel::*;
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Polar> {
    (0.0..2.0f64, 0.0..TAU).prop_map(|(r, a)| Polar::new(r, a))
}

fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn swapping_arguments(n in 2usize..8, k in 0.1..3.0f64, x in point(), y in point()) {
        let par = Dihedral::new(n, k).unwrap();
        let cfg = Config::default();
        let a = eval_gegenbauer_series(&par, x, y, &cfg).unwrap().value;
        let b = eval_gegenbauer_series(&par, y, x, &cfg).unwrap().value;
        prop_assert!(relative(a, b) < 1e-12);
    }

    #[test]
    fn invariance_under_the_group(n in 3usize..7, k in 0.1..3.0f64, x in point(), y in point(), turns in 0usize..6) {
        let par = Dihedral::new(n, k).unwrap();
        let cfg = Config { raw_angles: true, ..Config::default() };
        let d = eval_horn_series(&par, x, y, &cfg).unwrap().value;
        let rotated = Polar::new(x.radius, x.angle + TAU * turns as f64 / n as f64);
        let reflected = Polar::new(x.radius, -rotated.angle);
        for g in [rotated, reflected] {
            prop_assert!(relative(eval_horn_series(&par, g, y, &cfg).unwrap().value, d) < 1e-10);
        }
    }

    #[test]
    fn origin_gives_one(n in 2usize..9, k in 0.05..4.0f64, y in point()) {
        let par = Dihedral::new(n, k).unwrap();
        let v = eval_gegenbauer_series(&par, Polar::new(0.0, 0.0), y, &Config::default()).unwrap().value;
        prop_assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn value_is_positive_and_below_the_exponential_bound(n in 2usize..7, k in 0.1..3.0f64, x in point(), y in point()) {
        let par = Dihedral::new(n, k).unwrap();
        let v = eval_gegenbauer_series(&par, x, y, &Config::default()).unwrap().value;
        prop_assert!(v > 0.0);
        prop_assert!(v <= (x.radius * y.radius).exp() * (1.0 + 1e-12));
    }

    #[test]
    fn density_vanishes_outside_the_disk(p in 2usize..4, k in 0.3..2.0f64, rho in 0.2..2.0f64, excess in 1e-9..2.0f64, psi in 0.0..TAU) {
        let ev = EvenDihedral::new(p, k).unwrap();
        prop_assume!(ev.require_density().is_ok());
        let r = rho * (1.0 + excess);
        let h = density_h(&ev, rho, (r * psi.cos(), r * psi.sin()), &QuadratureScheme::TanhSinh { level: 3 }).unwrap();
        prop_assert_eq!(h.result.value, 0.0);
        prop_assert!(!h.region_nonempty);
    }

    #[test]
    fn density_is_nonnegative(p in 2usize..4, k in 0.4..2.0f64, s in 0.0..1.0f64, psi in 0.0..TAU) {
        let ev = EvenDihedral::new(p, k).unwrap();
        prop_assume!(ev.require_density().is_ok());
        let h = density_h(&ev, 1.0, (s * psi.cos(), s * psi.sin()), &QuadratureScheme::TanhSinh { level: 3 }).unwrap();
        prop_assert!(h.result.value >= 0.0);
    }
}

#[test]
fn radicand_is_nonnegative_on_the_simplex() {
    let mut worst = f64::INFINITY;
    for p in 2..=6 {
        let ev = EvenDihedral::new(p, 1.0).unwrap();
        for alpha in [0.2, 1.0] {
            for u in dirichlet_sample(&vec![alpha; p], 10_000, DEFAULT_SEED + p as u64).unwrap() {
                let (re, im) = ev.moment(u.full());
                worst = worst.min(1.0 - re * re - im * im);
                let c = abc(&ev, &u).unwrap();
                assert!(c.ac >= 0.0 && c.a >= 0.0);
            }
        }
    }
    assert!(worst >= -1e-12, "{worst}");
}

#[test]
fn monte_carlo_error_shrinks_like_inverse_root_of_samples() {
    let par = Dihedral::new(4, 1.0).unwrap();
    let (x, y) = (Polar::new(1.0, 0.2), Polar::new(1.2, 0.5));
    let err = |samples| {
        let scheme = QuadratureScheme::MonteCarlo { samples, seed: DEFAULT_SEED };
        eval_simplex_integral(&par, x, y, &scheme).unwrap().error
    };
    let ratio = err(40_000) / err(640_000);
    assert!((ratio - 4.0).abs() < 0.4, "{ratio}");
}

#[test]
fn monte_carlo_is_reproducible() {
    let par = Dihedral::new(5, 0.7).unwrap();
    let (x, y) = (Polar::new(1.0, 0.2), Polar::new(0.8, 1.5));
    let scheme = QuadratureScheme::MonteCarlo { samples: 100_000, seed: 17 };
    let a = eval_simplex_integral(&par, x, y, &scheme).unwrap();
    let b = eval_simplex_integral(&par, x, y, &scheme).unwrap();
    assert_eq!(a, b);
}

#[test]
fn single_precision_tracks_double() {
    let (x, y) = ((1.1, 0.3), (0.9, 2.0));
    for n in [3, 5] {
        let d = eval_gegenbauer_series(&Dihedral::new(n, 0.8).unwrap(), Polar::new(x.0, x.1), Polar::new(y.0, y.1), &Config::default())
            .unwrap()
            .value;
        let s = eval_gegenbauer_series(
            &Dihedral32::new(n, 0.8).unwrap(),
            Polar32::new(x.0 as f32, x.1 as f32),
            Polar32::new(y.0 as f32, y.1 as f32),
            &Config32::default(),
        )
        .unwrap()
        .value;
        assert!((s as f64 - d).abs() < 1e-5 * d, "{s} {d}");
    }
}
