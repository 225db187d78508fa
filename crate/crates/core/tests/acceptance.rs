//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test --test acceptance`.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use hankel_laplace::globalrel::{f_j, f_of_k};
use hankel_laplace::hkernels::{direct_pv_power_integral, f_kappa, pv_power_integral, KappaArgs, Path, Route};
use hankel_laplace::identities::*;
use hankel_laplace::solver::*;
use hankel_laplace::{Complex64, HankelDomain, QuadratureSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type C = Complex64;

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: String) -> Verdict {
    Verdict { ok, detail }
}

fn dom() -> HankelDomain {
    HankelDomain::new(1.0, 0.75 * PI).unwrap()
}

fn within(t: Duration, limit: f64) -> bool {
    t.as_secs_f64() < limit
}

fn c1_conformal() -> Verdict {
    let t = Instant::now();
    let pairs = [(1.0, 0.75 * PI), (0.5, 0.51 * PI), (2.0, PI), (3.7, 0.9 * PI), (6.0, 0.6 * PI)];
    let mut err: f64 = 0.0;
    for (a, al) in pairs {
        let d = HankelDomain::new(a, al).unwrap();
        let w = |z: C| d.conformal_map(z).unwrap();
        err = err.max(w(C::new(a, 0.0)).norm());
        err = err.max((w(C::from_polar(a, al)) + 1.0).norm());
        err = err.max((w(C::from_polar(a, -al)) - 1.0).norm());
    }
    let el = t.elapsed();
    verdict(err <= 1e-12 && within(el, 1.0), format!("max error {err:.2e}, {:.2?}", el))
}

fn c2_closed_form() -> Verdict {
    let t = Instant::now();
    let d = dom();
    let sp = QuadratureSpec::default();
    let rs: Vec<f64> = (0..10).map(|i| 1.1 + 6.9 * i as f64 / 9.0).collect();
    let al = d.alpha();
    let ths: Vec<f64> = (0..10).map(|j| -al + (j as f64 + 0.5) * 2.0 * al / 10.0).collect();
    let pts: Vec<(f64, f64)> = rs.iter().flat_map(|&r| ths.iter().map(move |&t| (r, t))).collect();
    let mut err: f64 = 0.0;
    for k in [-1.0, -1.5, -2.0] {
        for part in [Part::Re, Part::Im] {
            let kk = C::new(k, 0.0);
            let data = power_solution_data(&d, kk, part).unwrap();
            for f in solve_grid(&d, &data, &pts, &sp).unwrap() {
                err = err.max((f.q - power_exact(kk, part, f.r, f.theta)).abs());
            }
        }
    }
    let el = t.elapsed();
    verdict(err <= 1e-6 && within(el, 60.0), format!("max |solve - exact| {err:.2e}, {:.2?}", el))
}

/// Max residuals of `F_j` on the standard grids via both routes, and the
/// largest gap between them.
fn f_functionals(js: [usize; 2]) -> (f64, f64, f64, Duration) {
    let t = Instant::now();
    let d = dom();
    let sp = QuadratureSpec::with_tol(1e-11, 1e-13);
    let (mut phys, mut kap, mut gap) = (0.0f64, 0.0f64, 0.0f64);
    for k in default_f_kgrid(&d) {
        for pt in default_f_points(&d, 15) {
            let args = KappaArgs::from_domain(&d, k, pt.phi, pt.rho).unwrap();
            for j in js {
                let target = if j <= 2 { f_of_k(d.alpha(), k) } else { 0.0 };
                let x = if j % 2 == 1 { pt.phi } else { pt.rho };
                let p = f_j(&d, j, x, k, &sp).unwrap();
                let q = f_kappa(j, &args, Route::Numeric, &sp).unwrap().value;
                phys = phys.max((p - target).abs());
                kap = kap.max((q - target).abs());
                gap = gap.max((p - q).abs());
            }
        }
    }
    (phys, kap, gap, t.elapsed())
}

fn c3_prop_f1f2() -> Verdict {
    let (p, k, g, el) = f_functionals([1, 2]);
    verdict(
        p <= 1e-6 && k <= 1e-6 && g <= 1e-8 && within(el, 120.0),
        format!("(r,θ) route {p:.2e}, κ route {k:.2e}, route gap {g:.2e}, {el:.2?}"),
    )
}

fn c4_prop_f3f4() -> Verdict {
    let (p, k, g, el) = f_functionals([3, 4]);
    verdict(
        p <= 1e-6 && k <= 1e-6,
        format!("(r,θ) route {p:.2e}, κ route {k:.2e}, route gap {g:.2e}, {el:.2?}"),
    )
}

fn c5_lemma() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let sp = QuadratureSpec::with_tol(1e-12, 1e-14);
    let mut err: f64 = 0.0;
    let mut on_path = 0;
    for case in 0..10 {
        let p = C::new(rng.gen_range(-0.8..2.5), rng.gen_range(-0.4..0.4));
        let a = C::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.5..1.5));
        let b = C::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.5..1.5));
        let (path, z0, on) = match case % 3 {
            0 => (Path::Segment { from: a, to: b }, a + (b - a) * rng.gen_range(0.2..0.8), true),
            1 => {
                let r = rng.gen_range(0.3..2.0);
                let t0 = rng.gen_range(-0.9..0.7);
                (Path::Arc { center: C::new(0.0, 0.0), radius: r, t1: -1.2, t2: 1.0 }, C::from_polar(r, t0), true)
            }
            _ => {
                let m = a.norm().max(b.norm()) * rng.gen_range(1.25..2.0);
                (Path::Segment { from: a, to: b }, C::from_polar(m, rng.gen_range(-PI..PI)), false)
            }
        };
        on_path += on as usize;
        let closed = pv_power_integral(p, z0, &path, on).unwrap();
        let direct = direct_pv_power_integral(p, z0, &path, &sp).unwrap();
        err = err.max((closed - direct).norm() / (1.0 + direct.norm()));
    }
    let sym = pv_power_integral(
        C::new(0.0, 0.0),
        C::new(0.5, 0.0),
        &Path::Segment { from: C::new(0.0, 0.0), to: C::new(1.0, 0.0) },
        true,
    )
    .unwrap()
    .norm();
    verdict(
        err <= 1e-8 && sym <= 1e-10,
        format!("10 cases ({on_path} on-path) max gap {err:.2e}, symmetric case {sym:.2e}"),
    )
}

fn c6_k2() -> Verdict {
    let worst = DEFAULT_ZGRID.iter().map(|&z| check_k2(z).unwrap()).fold(0.0, f64::max);
    let z = 1e-5;
    let lim = (k2_lhs(z).unwrap() - 1.0).abs().max((k2_rhs(z) - 1.0).abs());
    verdict(worst <= 1e-8 && lim <= 1e-8, format!("max residual {worst:.2e}, z→0 limit gap {lim:.2e}"))
}

fn c7_k4() -> Verdict {
    let worst = [0.1, 0.5, 0.9].iter().map(|&y| check_k4(y).unwrap()).fold(0.0, f64::max);
    let edge = check_k4(0.99).unwrap();
    verdict(worst <= 1e-8 && edge <= 1e-6, format!("max residual {worst:.2e}, y=0.99 {edge:.2e}"))
}

fn c8_khalf() -> Verdict {
    let rs: Vec<C> = [0.25, 0.5, 0.75].iter().map(|&y| check_khalf(y).unwrap()).collect();
    let worst = rs.iter().map(|r| r.norm()).fold(0.0, f64::max);
    let im = rs.iter().map(|r| r.im.abs()).fold(0.0, f64::max);
    verdict(worst <= 1e-7 && im <= 1e-7, format!("max |residual| {worst:.2e}, max |Im| {im:.2e}"))
}

fn c9_general() -> Verdict {
    let a = ident1_report(DEFAULT_TOLERANCE).unwrap();
    let b = f2id_report(DEFAULT_TOLERANCE).unwrap();
    verdict(
        a.passed() && b.passed(),
        format!("ident1 max {:.2e} ({} pts), F2id max {:.2e} ({} pts)", a.max_abs, a.grid.len(), b.max_abs, b.grid.len()),
    )
}

fn c10_meijer_k0() -> Verdict {
    let worst = DEFAULT_BGRID.iter().map(|&b| check_meijer_k0(b).unwrap()).fold(0.0, f64::max);
    let shift = DEFAULT_BGRID.iter().map(|&b| meijer_contour_shift(b).unwrap()).fold(0.0, f64::max);
    verdict(worst <= 1e-7 && shift <= 1e-8, format!("max residual {worst:.2e}, contour shift {shift:.2e}"))
}

fn c11_zeta() -> Verdict {
    let t = Instant::now();
    let d = dom();
    let sp = QuadratureSpec::default();
    let r1 = zeta_relation_residual(&d, -1.0, &sp).unwrap();
    let r2 = zeta_relation_residual(&d, 0.5, &sp).unwrap();
    let s2 = hankel_moment_riemann(&d, C::new(2.0, 0.0), &sp).unwrap().norm();
    let el = t.elapsed();
    verdict(
        r1 <= 1e-6 && r2 <= 1e-6 && s2 <= 1e-8 && within(el, 30.0),
        format!("s=-1 {r1:.2e}, s=1/2 {r2:.2e}, |S(2)| {s2:.2e}, {el:.2?}"),
    )
}

fn c12_decay() -> Verdict {
    let d = dom();
    let sp = QuadratureSpec::with_tol(1e-13, 1e-15);
    // odd arc data: S = 0, S̃ ≠ 0, and a non-trivial remainder
    let data = NeumannData::custom(|_| 0.0, |_| 0.0, f64::sin, -1.0).unwrap();
    let s = moment_s(&d, &data, &sp).unwrap();
    let st = moment_s_tilde(&d, &data, &sp).unwrap();
    let theta = 0.6;
    let pts: Vec<(f64, f64)> = (0..9).map(|i| (10f64 * 10f64.powf(i as f64 / 4.0), theta)).collect();
    let fit: Vec<(f64, f64)> = solve_grid(&d, &data, &pts, &sp)
        .unwrap()
        .iter()
        .map(|f| ((f.r / d.a()).ln(), (f.q - asymptotic_from_moments(&d, s, st, f.r, theta)).abs().ln()))
        .collect();
    let slope = hankel_laplace::cli::loglog_slope(&fit).unwrap();
    let bound = -d.p() + 0.1;
    verdict(
        slope <= bound && s.abs() < 1e-12 && st.abs() > 0.1,
        format!("S {s:.1e}, S̃ {st:.3}, fitted exponent {slope:.3} (bound {bound:.3})"),
    )
}

fn c13_harmonic() -> Verdict {
    let d = dom();
    let sp = QuadratureSpec::with_tol(1e-14, 1e-16);
    let data = power_solution_data(&d, C::new(-1.0, 0.0), Part::Re).unwrap();
    let q = |r: f64, t: f64| solve(&d, &data, r, t, &sp).unwrap();
    let pts = [(1.3, 0.0), (1.5, 1.2), (2.0, -1.5), (3.0, 0.7)];
    let scale = pts.iter().map(|&(r, t)| q(r, t).abs()).fold(0.0, f64::max);
    let lap = |h: f64| {
        pts.iter()
            .map(|&(r, t)| {
                let k = h / r;
                let c = q(r, t);
                let qrr = (q(r + h, t) - 2.0 * c + q(r - h, t)) / (h * h);
                let qr = (q(r + h, t) - q(r - h, t)) / (2.0 * h);
                let qtt = (q(r, t + k) - 2.0 * c + q(r, t - k)) / (k * k);
                (qrr + qr / r + qtt / (r * r)).abs()
            })
            .fold(0.0, f64::max)
    };
    let h = 1e-2 * d.a();
    let (l1, l2) = (lap(h), lap(h / 2.0));
    verdict(
        l1 <= 1e-4 * scale && l1 >= 3.0 * l2,
        format!("|Δq| {:.2e}·scale at h, {:.2e}·scale at h/2, ratio {:.2}", l1 / scale, l2 / scale, l1 / l2),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 13] = [
        ("conformal checkpoints", c1_conformal),
        ("closed-form reproduction", c2_closed_form),
        ("F1 = F2 = f(k)", c3_prop_f1f2),
        ("F3 = F4 = 0", c4_prop_f3f4),
        ("principal-value power integral", c5_lemma),
        ("k = 2 identity", c6_k2),
        ("k = 4 identity", c7_k4),
        ("k = 1/2 identity", c8_khalf),
        ("general identity grids", c9_general),
        ("Meijer-G k = 0", c10_meijer_k0),
        ("zeta relation", c11_zeta),
        ("asymptotic decay", c12_decay),
        ("harmonicity", c13_harmonic),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = f();
        failed += !v.ok as usize;
        println!("{} {:>2} {name}: {}", if v.ok { "PASS" } else { "FAIL" }, i + 1, v.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
