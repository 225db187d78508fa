use std::f64::consts::{FRAC_PI_4, PI};

use hankel_laplace::identities::*;
use hankel_laplace::{HankelDomain, QuadratureSpec};
use proptest::prelude::*;

#[test]
fn k2_common_value_at_one() {
    let want = 3.0 * (7.0 / 2f64.sqrt() * (1.0 + 2f64.sqrt()).ln() - 4.0);
    assert!((k2_lhs(1.0).unwrap() - want).abs() < 1e-8);
    for z in DEFAULT_ZGRID {
        assert!(check_k2(z).unwrap() < 1e-8, "z={z}");
    }
    assert!((k2_lhs(1e-4).unwrap() - 1.0).abs() < 1e-8);
    assert!((k2_rhs(1e-4) - 1.0).abs() < 1e-8);
}

#[test]
fn khalf_cancels_imaginary_parts() {
    for y in [0.25, 0.5, 0.75, 0.9] {
        let r = check_khalf(y).unwrap();
        assert!(r.norm() < 1e-7, "y={y}: {r}");
        assert!(r.im.abs() < 1e-7);
        // the imaginary parts cancelled are O(1)
        assert!(khalf_rhs(y).unwrap().im.abs() < 1e-7);
    }
}

#[test]
fn k4_corrected_and_printed() {
    // frozen from a 30-digit series evaluation
    assert!((k4_lhs(0.5).unwrap() - 1.119_392_405_037_947_5).abs() < 1e-12);
    for y in [0.1, 0.5, 0.9] {
        assert!(check_k4(y).unwrap() < 1e-8, "y={y}");
    }
    assert!(check_k4(0.99).unwrap() < 1e-6);
    assert!((k4_rhs_printed(0.5).unwrap() - k4_lhs(0.5).unwrap()).abs() > 1.0);
}

#[test]
fn ident1_default_grid() {
    let rep = ident1_report(DEFAULT_TOLERANCE).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.max_imag < 1e-9);
    assert!(check_ident1(1.0 + POLE_SHIFT, 0.5).unwrap().norm() < 1e-7);
    assert!(check_ident1(0.5, 1e-3).unwrap().norm() < 1e-6);
}

#[test]
fn ident1_rejects_out_of_range() {
    assert!(check_ident1(0.5, 1.2).is_err());
    assert!(check_ident1(-1.5, 0.5).is_err());
}

#[test]
fn f2_identity_default_grid_and_symmetry() {
    let rep = f2id_report(DEFAULT_TOLERANCE).unwrap();
    assert!(rep.passed(), "{rep:?}");
    let a = check_f2_identity(1.0, 0.5).unwrap();
    let b = check_f2_identity(1.0, 2.0).unwrap();
    assert!(a.norm() < 1e-7 && b.norm() < 1e-7);
    assert!(check_f2_identity(1e-3, 0.5).unwrap().norm() < 1e-4);
}

#[test]
fn meijer_k0_value() {
    let b = FRAC_PI_4;
    let s = 0.5f64.sqrt();
    let want = 2.0 / PI.powf(1.5) * s * (s / (1.0 + s)).ln();
    assert!((meijer_k0_lhs(b).unwrap() - want).abs() < 1e-7);
    for b in DEFAULT_BGRID {
        assert!(check_meijer_k0(b).unwrap() < 1e-7);
        assert!(meijer_contour_shift(b).unwrap() < 1e-8);
    }
    assert!(meijer_k0_rhs(PI / 2.0 - 1e-9).abs() < 1e-8);
}

#[test]
fn meijer_general_and_printed() {
    let rep = meijer_report(DEFAULT_TOLERANCE).unwrap();
    assert!(rep.passed(), "{rep:?}");
    // the printed right side agrees only at k = 1
    let b = PI / 5.0;
    assert!((meijer_rhs_printed(1.0, b).unwrap().re - meijer_lhs(1.0, b).unwrap()).abs() < 1e-7);
    assert!((meijer_rhs_printed(0.5, b).unwrap().re - meijer_lhs(0.5, b).unwrap()).abs() > 1e-3);
}

#[test]
fn f_identities_both_routes() {
    let d = HankelDomain::new(1.0, 3.0 * PI / 4.0).unwrap();
    let sp = QuadratureSpec::with_tol(1e-11, 1e-13);
    let pts = default_f_points(&d, 4);
    let rep = check_f_identities(&d, &default_f_kgrid(&d), &pts, &sp, DEFAULT_TOLERANCE).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.aux["route_gap"] < 1e-6);
}

#[test]
fn grid_refinement_is_stable() {
    let coarse: Vec<f64> = DEFAULT_YGRID.to_vec();
    let fine: Vec<f64> = (1..=10).map(|i| 0.09 * i as f64).collect();
    for k in [-0.25, 0.5, 2.0] {
        let m = |ys: &[f64]| {
            ys.iter().map(|&y| check_ident1(k, y).unwrap().norm()).fold(0.0, f64::max)
        };
        let (c, f) = (m(&coarse), m(&fine));
        assert!(f <= 2.0 * c.max(1e-13), "k={k}: {c} -> {f}");
    }
}

#[test]
fn suite_runs_serialize() {
    let d = HankelDomain::new(1.0, 3.0 * PI / 4.0).unwrap();
    let reps = run_suite(Suite::K2, &d, &QuadratureSpec::default(), 1e-8).unwrap();
    let js = serde_json::to_string(&reps).unwrap();
    assert!(js.contains("\"identity_id\":\"k2\""));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn prop_ident1(k in -0.9f64..4.5, y in 0.05f64..0.95) {
        let k = if (k - k.round()).abs() < 1e-2 && k.round() as i64 % 2 != 0 { k + 0.02 } else { k };
        prop_assume!(k.abs() > 1e-2);
        let r = check_ident1(k, y).unwrap();
        prop_assert!(r.norm() < 1e-6, "k={} y={}: {}", k, y, r);
    }

    #[test]
    fn prop_f2_identity_symmetric(k in -0.9f64..4.5, y in 0.05f64..0.95) {
        let k = if (k - k.round()).abs() < 1e-2 && k.round() as i64 % 2 == 0 { k + 0.02 } else { k };
        let a = check_f2_identity(k, y).unwrap();
        let b = check_f2_identity(k, 1.0 / y).unwrap();
        prop_assert!(a.norm() < 1e-6, "k={} y={}: {}", k, y, a);
        prop_assert!((a - b).norm() < 1e-9);
    }

    #[test]
    fn prop_k2(z in 0.01f64..6.0) {
        prop_assert!(check_k2(z).unwrap() < 1e-8 * (1.0 + k2_rhs(z).abs()));
    }

    #[test]
    fn prop_k4(y in 0.02f64..0.95) {
        prop_assert!(check_k4(y).unwrap() < 1e-8 * (1.0 + k4_rhs(y).unwrap().abs()));
    }

    #[test]
    fn prop_khalf(y in 0.05f64..0.95) {
        prop_assert!(check_khalf(y).unwrap().norm() < 1e-7);
    }
}
