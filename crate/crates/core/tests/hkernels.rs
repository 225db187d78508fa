use std::f64::consts::PI;

use hankel_laplace::globalrel::{f_j, f_of_k};
use hankel_laplace::hkernels::*;
use hankel_laplace::{Complex64, HankelDomain, QuadratureSpec};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type C = Complex64;

fn spec() -> QuadratureSpec {
    QuadratureSpec::with_tol(1e-12, 1e-14)
}

const KAPPAS: [f64; 6] = [-0.75, -0.3, 0.4, 1.0, 1.7, 2.5];
const PSIS: [f64; 3] = [-1.0, 0.3, 1.2];
const YS: [f64; 3] = [0.1, 0.5, 0.95];

fn grid() -> impl Iterator<Item = KappaArgs> {
    KAPPAS.into_iter().flat_map(|k| {
        PSIS.into_iter()
            .zip(YS)
            .map(move |(psi, y)| KappaArgs::new(k, psi, y).unwrap())
    })
}

#[test]
fn quadrature_matches_closed_forms() {
    let sp = spec();
    for a in grid() {
        for j in 1..=7 {
            let n = h(j, &a, &sp).unwrap();
            let c = h_closed(j, &a).unwrap();
            let tol = if (3..=5).contains(&j) { 1e-8 } else { 1e-7 };
            assert!((n - c.value).abs() < tol, "h{j} {a:?}: {n} vs {}", c.value);
            assert!(c.imag.abs() < 1e-9, "h{j} {a:?}: imag {}", c.imag);
        }
        let n = h3_reflected(&a, &sp).unwrap();
        let c = h3_reflected_closed(&a).unwrap();
        assert!((n - c.value).abs() < 1e-8);
    }
}

#[test]
fn real_forms_match_quadrature() {
    let sp = spec();
    for a in grid() {
        for j in [1, 2, 5, 6, 7] {
            let n = h(j, &a, &sp).unwrap();
            let s = h_section5(j, &a).unwrap();
            assert!((n - s).abs() < 1e-7, "h{j} {a:?}: {n} vs {s}");
        }
    }
}

#[test]
fn real_forms_at_parameter_poles() {
    // k = 2, 4 for h₆ and k = 1, 3 for h₇ are removable singularities
    let sp = spec();
    for k in [1.0, 2.0, 3.0, 4.0] {
        let a = KappaArgs::new(k, 0.5, 0.4).unwrap();
        for j in [6, 7] {
            let n = h(j, &a, &sp).unwrap();
            let s = h_section5(j, &a).unwrap();
            assert!((n - s).abs() < 1e-7, "h{j} k={k}: {n} vs {s}");
        }
    }
}

#[test]
fn h5_and_h6_anchor_values() {
    let a = KappaArgs::new(1.0, 0.2, 0.5).unwrap();
    let n5 = h(5, &a, &spec()).unwrap();
    assert!((h_closed(5, &a).unwrap().value - n5).abs() < 1e-8);
    let n6 = h(6, &a, &spec()).unwrap();
    assert!((h_section5(6, &a).unwrap() - n6).abs() < 1e-7);
    assert!((h_section5(5, &a).unwrap() - n5).abs() < 1e-8);
}

#[test]
fn printed_real_forms_are_off() {
    let a = KappaArgs::new(0.5, 0.6, 0.5).unwrap();
    let true6 = h(6, &a, &spec()).unwrap();
    let pr = h6_as_printed(&a).unwrap();
    assert!((2.0 * pr - true6).abs() < 1e-8, "{pr} {true6}");
    assert!((pr - true6).abs() > 0.4 * true6.abs());
    let true2 = h(2, &a, &spec()).unwrap();
    assert!((h2_as_printed(&a).unwrap() - true2).abs() > 1e-3);
}

#[test]
fn h4_near_coalescing_pole_is_finite() {
    let a = KappaArgs::new(0.7, 0.1, 0.999).unwrap();
    let n = h(4, &a, &spec()).unwrap();
    assert!(n.is_finite());
    assert!((n - h_closed(4, &a).unwrap().value).abs() < 1e-7);
}

#[test]
fn k0_meijer_consistency() {
    // at k = 0 the Meijer form of h₁ reduces to the elementary k = 0 identity
    let psi = PI / 4.0;
    let a = KappaArgs::new(0.0, psi, 0.5).unwrap();
    let s = h_section5(1, &a).unwrap();
    let n = h(1, &a, &spec()).unwrap();
    assert!((s - n).abs() < 1e-7, "{s} vs {n}");
}

#[test]
fn kappa_form_identities() {
    let sp = spec();
    for a in grid() {
        let target = f_of_k(PI / 2.0, -a.kappa);
        for route in [Route::Numeric, Route::Closed, Route::Section5] {
            for j in 1..=4 {
                let f = f_kappa(j, &a, route, &sp).unwrap();
                let want = if j <= 2 { target } else { 0.0 };
                assert!((f.value - want).abs() < 1e-7, "F{j} {route:?} {a:?}: {}", f.value);
                assert!(f.imag.abs() < 1e-9, "F{j} {route:?} {a:?}: imag {}", f.imag);
            }
        }
    }
}

#[test]
fn kappa_form_matches_physical_form() {
    let d = HankelDomain::new(1.5, 0.8 * PI).unwrap();
    let sp = spec();
    for k in [-1.2, -0.4, 0.3] {
        for (phi, rho) in [(0.4, 2.0), (-1.1, 9.0)] {
            let a = KappaArgs::from_domain(&d, k, phi, rho).unwrap();
            for j in 1..=4 {
                let x = if j % 2 == 1 { phi } else { rho };
                let phys = f_j(&d, j, x, k, &sp).unwrap();
                let kap = f_kappa(j, &a, Route::Numeric, &sp).unwrap().value;
                assert!((phys - kap).abs() < 1e-8, "F{j} k={k}: {phys} vs {kap}");
            }
        }
    }
}

#[test]
fn lemma_matches_direct_quadrature() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e33a);
    let sp = spec();
    let mut checked = 0;
    while checked < 16 {
        let p = C::new(rng.gen_range(-0.9..3.0), rng.gen_range(-0.5..0.5));
        let case = checked % 4;
        let (path, z0, on) = match case {
            // segment through z0
            0 => {
                let a = C::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.5..1.5));
                let b = C::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.5..1.5));
                let t0: f64 = rng.gen_range(0.2..0.8);
                (Path::Segment { from: a, to: b }, a + (b - a) * t0, true)
            }
            // origin-centred arc through z0, either orientation
            1 => {
                let r = rng.gen_range(0.3..2.0);
                let (t1, t2) = if rng.gen_bool(0.5) { (-1.2, 1.0) } else { (1.0, -1.2) };
                let t0 = rng.gen_range(-0.9..0.7);
                (Path::Arc { center: C::new(0.0, 0.0), radius: r, t1, t2 }, C::from_polar(r, t0), true)
            }
            // off-path segment
            2 => {
                let a = C::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.5..1.5));
                let b = C::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.5..1.5));
                let m = a.norm().max(b.norm()) * rng.gen_range(1.25..2.0);
                (Path::Segment { from: a, to: b }, C::from_polar(m, rng.gen_range(-PI..PI)), false)
            }
            // off-path polyline
            _ => {
                let vs: Vec<C> = (0..3)
                    .map(|_| C::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.5..1.5)))
                    .collect();
                let m = vs.iter().map(|z| z.norm()).fold(0.0, f64::max) * rng.gen_range(1.25..2.0);
                (Path::Polyline { vertices: vs }, C::from_polar(m, rng.gen_range(-PI..PI)), false)
            }
        };
        let closed = pv_power_integral(p, z0, &path, on).unwrap();
        let direct = direct_pv_power_integral(p, z0, &path, &sp)
            .unwrap_or_else(|e| panic!("case {case} p={p} z0={z0} {path:?}: {e:?}"));
        assert!(
            (closed - direct).norm() < 1e-8 * (1.0 + direct.norm()),
            "case {case} p={p} z0={z0} {path:?}: {closed} vs {direct}"
        );
        checked += 1;
    }
}

#[test]
fn lemma_branch_anchor() {
    let path = Path::Segment { from: C::new(0.0, 0.0), to: C::new(1.0, 0.0) };
    let v = pv_power_integral(C::new(0.0, 0.0), C::new(0.5, 0.0), &path, true).unwrap();
    assert!(v.norm() < 1e-13);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn prop_h345_closed(k in -0.9f64..3.0, psi in -1.4f64..1.4, y in 0.05f64..0.98) {
        prop_assume!(k.abs() > 1e-3);
        let a = KappaArgs::new(k, psi, y).unwrap();
        let sp = spec();
        for j in 3..=5 {
            let n = h(j, &a, &sp).unwrap();
            let c = h_closed(j, &a).unwrap();
            prop_assert!((n - c.value).abs() < 1e-8, "h{} {:?}: {} vs {}", j, a, n, c.value);
        }
    }

    #[test]
    fn prop_f_kappa_real(k in -0.9f64..3.0, psi in -1.4f64..1.4, y in 0.05f64..0.98, j in 1usize..=4) {
        prop_assume!(k.abs() > 1e-3);
        let a = KappaArgs::new(k, psi, y).unwrap();
        let f = f_kappa(j, &a, Route::Closed, &spec()).unwrap();
        prop_assert!(f.imag.abs() < 1e-9);
        let want = if j <= 2 { f_of_k(PI / 2.0, -k) } else { 0.0 };
        prop_assert!((f.value - want).abs() < 1e-7);
    }

    #[test]
    fn prop_lemma_reversal(pr in -0.9f64..3.0, t0 in 0.15f64..0.85) {
        let a = C::new(0.3, -1.0);
        let b = C::new(1.4, 0.8);
        let z0 = a + (b - a) * t0;
        let p = C::new(pr, 0.0);
        let fwd = pv_power_integral(p, z0, &Path::Segment { from: a, to: b }, true).unwrap();
        let back = pv_power_integral(p, z0, &Path::Segment { from: b, to: a }, true).unwrap();
        prop_assert!((fwd + back).norm() < 1e-10);
    }
}
