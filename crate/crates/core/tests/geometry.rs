use std::f64::consts::PI;

use hankel_laplace::geometry::{ChangeVarsInput, HankelDomain};
use hankel_laplace::{Complex64, Error};
use proptest::prelude::*;

fn dom() -> HankelDomain {
    HankelDomain::new(1.0, 0.75 * PI).unwrap()
}

#[test]
fn map_xy_example() {
    let m = dom().map_xy(2.0, 0.0).unwrap();
    assert!(m.x.abs() < 1e-15);
    assert!((m.y - 0.5 * (2f64.powf(2.0 / 3.0) - 2f64.powf(-2.0 / 3.0))).abs() < 1e-15);
    assert!((dom().r_fn(2.0).unwrap() - (2f64.powf(2.0 / 3.0) + 2f64.powf(-2.0 / 3.0))).abs() < 1e-15);
    assert_eq!(dom().r_fn(1.0).unwrap(), 2.0);
}

#[test]
fn outside_points_rejected() {
    let d = dom();
    assert_eq!(d.conformal_map(Complex64::new(0.5, 0.0)).unwrap_err(), Error::OutsideDomain);
    assert_eq!(d.map_xy(2.0, 2.5).unwrap_err(), Error::OutsideDomain);
    assert!(HankelDomain::new(1.0, 1.0).is_err());
    assert!(HankelDomain::new(7.0, 3.0).is_err());
}

#[test]
fn grid_agreement_20x20() {
    let d = dom();
    for i in 0..20 {
        for j in 0..20 {
            let r = 1.0 + 9.0 * i as f64 / 19.0;
            let t = -d.alpha() + 2.0 * d.alpha() * j as f64 / 19.0;
            let w = d.conformal_map(Complex64::from_polar(r, t)).unwrap();
            let m = d.map_xy(r, t).unwrap();
            assert!((w.re - m.x).abs() <= 1e-13 * (1.0 + w.norm()));
            assert!((w.im - m.y).abs() <= 1e-13 * (1.0 + w.norm()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_interior_maps_up(alpha in 1.6f64..PI, a in 0.1f64..6.0, s in 1.001f64..50.0, f in -0.999f64..0.999) {
        let d = HankelDomain::new(a, alpha).unwrap();
        let w = d.conformal_map(Complex64::from_polar(a * s, f * alpha)).unwrap();
        prop_assert!(w.im > 0.0);
    }

    #[test]
    fn prop_boundary_maps_to_real_axis(alpha in 1.6f64..PI, s in 1.0f64..50.0, f in -1.0f64..1.0) {
        let d = HankelDomain::new(1.0, alpha).unwrap();
        let ray = d.conformal_map(Complex64::from_polar(s, alpha)).unwrap();
        let arc = d.conformal_map(Complex64::from_polar(1.0, f * alpha)).unwrap();
        prop_assert!(ray.im.abs() < 1e-12 * (1.0 + ray.norm()));
        prop_assert!(arc.im.abs() < 1e-12);
    }

    #[test]
    fn prop_r_identity(alpha in 1.6f64..PI, a in 0.1f64..6.0, s in 1.0f64..100.0) {
        let d = HankelDomain::new(a, alpha).unwrap();
        let rho = a * s;
        let r = d.r_fn(rho).unwrap();
        let t = s.powf(d.p());
        let rhs = 0.25 * (t - 1.0 / t).powi(2);
        prop_assert!(((r / 2.0).powi(2) - 1.0 - rhs).abs() <= 1e-13 * (1.0 + rhs));
        prop_assert!(r >= 2.0);
    }

    #[test]
    fn prop_change_vars_round_trip(
        alpha in 1.6f64..PI, s in 1.0f64..100.0, s2 in 1.0f64..100.0,
        f in -1.0f64..1.0, g in -1.0f64..1.0, kr in -3.0f64..1.0, ki in -1.0f64..1.0,
    ) {
        let d = HankelDomain::new(1.3, alpha).unwrap();
        let input = ChangeVarsInput {
            r: Some(1.3 * s),
            rho: Some(1.3 * s2),
            k: Some(Complex64::new(kr, ki)),
            theta: Some(f * alpha),
            phi: Some(g * alpha),
        };
        let back = d.change_vars_inverse(&d.change_vars(&input).unwrap()).unwrap();
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-13 * (1.0 + b.abs());
        prop_assert!(close(back.r.unwrap(), input.r.unwrap()));
        prop_assert!(close(back.rho.unwrap(), input.rho.unwrap()));
        prop_assert!((back.k.unwrap() - input.k.unwrap()).norm() <= 1e-13 * 4.0);
        prop_assert!(close(back.theta.unwrap(), input.theta.unwrap()));
        prop_assert!(close(back.phi.unwrap(), input.phi.unwrap()));
    }
}
