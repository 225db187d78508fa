//! Global relations for the Neumann problem and the functionals `F₁`–`F₄`.
//!
//! For a decaying harmonic `q` with Neumann data `(g₊, g₋, g)` and
//! Dirichlet traces on the boundary, the relations
//!
//! ```text
//! k{aᵏ∫e^{±ikθ}q(a,θ)dθ ± i∫rᵏ[e^{∓iαk}q(r,−α) − e^{±iαk}q(r,α)]dr/r}
//!     = a^{k+1}∫e^{±ikθ}g dθ + ∫rᵏ[e^{∓iαk}g₋ − e^{±iαk}g₊]dr/r
//! ```
//!
//! hold for `Re k < π/2α`. Their sum and difference give the cosine and sine
//! forms. Substituting the solution formula yields the functionals `F_j`,
//! which equal `f(k)` (`j = 1, 2`) or vanish (`j = 3, 4`).

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::HankelDomain;
use crate::quadrature::{ln_abs_1m, integrate_adaptive, integrate_ray_with, integrate_singular, QuadratureSpec, RayOptions};
use crate::solver::{
    arc_integral, dirichlet_arc, dirichlet_ray, power_exact, ray_integral, ArcKernel, BoundaryFn, NeumannData, Part,
};

/// A spectral parameter admissible for the global relations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralPoint {
    pub k: Complex64,
}

impl SpectralPoint {
    /// Requires `Re k < π/2α`.
    pub fn new(d: &HankelDomain, k: Complex64) -> Result<Self> {
        if !(k.re < d.p()) {
            return Err(Error::SpectralOutOfRange);
        }
        Ok(SpectralPoint { k })
    }
}

/// Which global relation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Plus,
    Minus,
    /// Cosine form (half the sum of the two).
    Sum,
    /// Sine form.
    Diff,
}

/// Dirichlet values of a solution: `q(a,θ)`, `q(r,α)`, `q(r,−α)`.
#[derive(Clone)]
pub struct DirichletTraces {
    pub arc: BoundaryFn,
    pub plus: BoundaryFn,
    pub minus: BoundaryFn,
    /// The traces are bounded by `C·(r/a)^decay_exponent` (log factors
    /// allowed).
    pub decay_exponent: f64,
}

impl DirichletTraces {
    /// Traces of `q = Re zᵏ` or `Im zᵏ` in closed form.
    pub fn power(d: &HankelDomain, k: Complex64, part: Part) -> Self {
        let a = d.a();
        let al = d.alpha();
        DirichletTraces {
            arc: Arc::new(move |th| power_exact(k, part, a, th)),
            plus: Arc::new(move |r| power_exact(k, part, r, al)),
            minus: Arc::new(move |r| power_exact(k, part, r, -al)),
            decay_exponent: k.re,
        }
    }

    /// Traces computed from the data by the trace formulas (each evaluation
    /// runs its own quadratures).
    pub fn from_solver(d: &HankelDomain, data: &NeumannData, spec: &QuadratureSpec) -> Self {
        let (d1, d2, d3) = (*d, *d, *d);
        let (s1, s2, s3) = (spec.clone(), spec.clone(), spec.clone());
        let (n1, n2, n3) = (data.clone(), data.clone(), data.clone());
        DirichletTraces {
            arc: Arc::new(move |th| dirichlet_arc(&d1, &n1, th, ArcKernel::Printed, &s1).unwrap_or(f64::NAN)),
            plus: Arc::new(move |r| dirichlet_ray(&d2, &n2, r, 1.0, &s2).unwrap_or(f64::NAN)),
            minus: Arc::new(move |r| dirichlet_ray(&d3, &n3, r, -1.0, &s3).unwrap_or(f64::NAN)),
            decay_exponent: data.decay_exponent,
        }
    }
}

fn cexp(z: Complex64) -> Complex64 {
    z.exp()
}

fn ray_c<F: Fn(f64) -> Complex64>(d: &HankelDomain, f: F, decay: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    integrate_ray_with(f, &RayOptions::new(d.a(), d.p(), decay), spec)
}

/// LHS − RHS of the selected global relation.
pub fn gr_residual(
    d: &HankelDomain,
    data: &NeumannData,
    traces: &DirichletTraces,
    k: Complex64,
    variant: Variant,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    SpectralPoint::new(d, k)?;
    let a = d.a();
    let al = d.alpha();
    let i = Complex64::i();
    let rk = |r: f64| (k * r.ln()).exp();
    let q_decay = traces.decay_exponent + k.re;
    let g_decay = data.decay_exponent + k.re;
    let (qa, qp, qm) = (&traces.arc, &traces.plus, &traces.minus);
    let (ga, gp, gm) = (&data.g_arc, &data.g_plus, &data.g_minus);
    match variant {
        Variant::Plus | Variant::Minus => {
            let sg = if variant == Variant::Plus { 1.0 } else { -1.0 };
            let e_m = cexp(-i * al * k * sg); // e^{∓iαk}
            let e_p = cexp(i * al * k * sg); // e^{±iαk}
            let wt = |th: f64| cexp(i * k * th * sg);
            let arc_q: Complex64 = integrate_adaptive(|th| wt(th) * qa(th), -al, al, spec)?;
            let ray_q = ray_c(d, |r| rk(r) * (e_m * qm(r) - e_p * qp(r)), q_decay, spec)?;
            let lhs = k * (rk(a) * arc_q + i * sg * ray_q);
            let arc_g: Complex64 = integrate_adaptive(|th| wt(th) * ga(th), -al, al, spec)?;
            let ray_g = ray_c(d, |r| rk(r) * (e_m * gm(r) - e_p * gp(r)), g_decay, spec)?;
            let rhs = rk(a) * a * arc_g + ray_g;
            Ok(lhs - rhs)
        }
        Variant::Sum => {
            let arc_q: Complex64 = integrate_adaptive(|th| (k * th).cos() * qa(th), -al, al, spec)?;
            let ray_q = ray_c(d, |r| rk(r) * (qm(r) + qp(r)), q_decay, spec)?;
            let lhs = k * (rk(a) * arc_q + (al * k).sin() * ray_q);
            let arc_g: Complex64 = integrate_adaptive(|th| (k * th).cos() * ga(th), -al, al, spec)?;
            let ray_g = ray_c(d, |r| rk(r) * (gm(r) - gp(r)), g_decay, spec)?;
            Ok(lhs - (rk(a) * a * arc_g + (al * k).cos() * ray_g))
        }
        Variant::Diff => {
            let arc_q: Complex64 = integrate_adaptive(|th| (k * th).sin() * qa(th), -al, al, spec)?;
            let ray_q = ray_c(d, |r| rk(r) * (qm(r) - qp(r)), q_decay, spec)?;
            let lhs = k * (rk(a) * arc_q + (al * k).cos() * ray_q);
            let arc_g: Complex64 = integrate_adaptive(|th| (k * th).sin() * ga(th), -al, al, spec)?;
            let ray_g = ray_c(d, |r| rk(r) * (gm(r) + gp(r)), g_decay, spec)?;
            Ok(lhs - (rk(a) * a * arc_g - (al * k).sin() * ray_g))
        }
    }
}

/// `f(k) = −sin(αk)[2 ln 2 + π/(αk)]`, with the limit `−π` at `k = 0`.
pub fn f_of_k(alpha: f64, k: f64) -> f64 {
    let x = alpha * k;
    let sinc = if x.abs() < 1e-8 { 1.0 - x * x / 6.0 } else { x.sin() / x };
    -2.0 * 2f64.ln() * x.sin() - PI * sinc
}

fn check_real_k(d: &HankelDomain, k: f64) -> Result<()> {
    if !k.is_finite() || k >= d.p() {
        return Err(Error::SpectralOutOfRange);
    }
    Ok(())
}

/// `∫ₐ^∞ (r/a)ᵏ h(r) dr/r` where `h = O((r/a)^{−m p})`.
fn weighted_ray<H: Fn(f64) -> f64>(
    d: &HankelDomain,
    k: f64,
    m: f64,
    h: H,
    singular: &[f64],
    spec: &QuadratureSpec,
) -> Result<f64> {
    let a = d.a();
    ray_integral(d, |r| (r / a).powf(k) * h(r), k - m * d.p(), singular, spec)
}

/// `ln|R(r)²/4 − c4/4| − G(r)` in a cancellation-free form.
fn g_bracket(d: &HankelDomain, r: f64, c4: f64) -> f64 {
    let big = (r / d.a()).powf(d.p());
    let rr = big + 1.0 / big;
    2.0 * (1.0 / (big * big)).ln_1p() + ln_abs_1m(c4 / (rr * rr))
}

fn check_phi(d: &HankelDomain, phi: f64) -> Result<()> {
    if phi.abs() < d.alpha() {
        Ok(())
    } else {
        Err(Error::OutsideDomain)
    }
}

fn check_rho(d: &HankelDomain, rho: f64) -> Result<()> {
    if rho > d.a() && rho.is_finite() {
        Ok(())
    } else {
        Err(Error::OutsideDomain)
    }
}

/// `F₁(φ,k) = k∫cos kθ ln|sin pφ + sin pθ|dθ
///   + k sin(αk)∫(r/a)ᵏ[ln|R(r)²/4 − sin²pφ| − G(r)]dr/r − π cos kφ`.
pub fn f1(d: &HankelDomain, phi: f64, k: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_phi(d, phi)?;
    check_real_k(d, k)?;
    if k == 0.0 {
        return Ok(-PI);
    }
    let p = d.p();
    let sp = (p * phi).sin();
    let th = arc_integral(d, |t| (k * t).cos() * (sp + (p * t).sin()).abs().ln(), &[-phi, -d.alpha(), d.alpha()], spec)?;
    let ray = weighted_ray(d, k, 2.0, |r| g_bracket(d, r, 4.0 * sp * sp), &[], spec)?;
    Ok(k * th + k * (d.alpha() * k).sin() * ray - PI * (k * phi).cos())
}

/// `F₂(ρ,k) = k∫cos kθ ln|R(ρ)/2 + sin pθ|dθ
///   + k sin(αk)∫(r/a)ᵏ[ln|R(r)²/4 − R(ρ)²/4| − G(r)]dr/r − π cos(αk)(ρ/a)ᵏ`.
pub fn f2(d: &HankelDomain, rho: f64, k: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_rho(d, rho)?;
    check_real_k(d, k)?;
    if k == 0.0 {
        return Ok(-PI);
    }
    let p = d.p();
    let rh = d.r_unchecked(rho);
    let th = arc_integral(d, |t| (k * t).cos() * (0.5 * rh + (p * t).sin()).abs().ln(), &[-d.alpha(), d.alpha()], spec)?;
    let ray = weighted_ray(d, k, 2.0, |r| g_bracket(d, r, rh * rh), &[rho], spec)?;
    Ok(k * th + k * (d.alpha() * k).sin() * ray - PI * (d.alpha() * k).cos() * (rho / d.a()).powf(k))
}

/// `F₃(φ,k) = −k∫sin kθ ln|sin pφ + sin pθ|dθ
///   + k cos(αk)∫(r/a)ᵏ ln|(R(r) + 2sin pφ)/(R(r) − 2sin pφ)|dr/r − π sin kφ`.
pub fn f3(d: &HankelDomain, phi: f64, k: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_phi(d, phi)?;
    check_real_k(d, k)?;
    if k == 0.0 {
        return Ok(0.0);
    }
    let p = d.p();
    let sp = (p * phi).sin();
    let th = arc_integral(d, |t| (k * t).sin() * (sp + (p * t).sin()).abs().ln(), &[-phi, -d.alpha(), d.alpha()], spec)?;
    let ray = weighted_ray(
        d,
        k,
        1.0,
        |r| {
            let rr = d.r_unchecked(r);
            2.0 * (2.0 * sp / rr).atanh()
        },
        &[],
        spec,
    )?;
    Ok(-k * th + k * (d.alpha() * k).cos() * ray - PI * (k * phi).sin())
}

/// `F₄(ρ,k) = k∫sin kθ ln|R(ρ)/2 + sin pθ|dθ
///   + k cos(αk)∫(r/a)ᵏ ln|(R(r) − R(ρ))/(R(r) + R(ρ))|dr/r + π sin(αk)(ρ/a)ᵏ`.
pub fn f4(d: &HankelDomain, rho: f64, k: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_rho(d, rho)?;
    check_real_k(d, k)?;
    if k == 0.0 {
        return Ok(0.0);
    }
    let p = d.p();
    let rh = d.r_unchecked(rho);
    let th = arc_integral(d, |t| (k * t).sin() * (0.5 * rh + (p * t).sin()).abs().ln(), &[-d.alpha(), d.alpha()], spec)?;
    let ray = weighted_ray(
        d,
        k,
        1.0,
        |r| {
            let rr = d.r_unchecked(r);
            ln_abs_1m(rh / rr) - (rh / rr).ln_1p()
        },
        &[rho],
        spec,
    )?;
    Ok(k * th + k * (d.alpha() * k).cos() * ray + PI * (d.alpha() * k).sin() * (rho / d.a()).powf(k))
}

/// `F_j` for `j ∈ 1..=4`; `x` is `φ` for `j ∈ {1, 3}` and `ρ` for `j ∈ {2, 4}`.
pub fn f_j(d: &HankelDomain, j: usize, x: f64, k: f64, spec: &QuadratureSpec) -> Result<f64> {
    match j {
        1 => f1(d, x, k, spec),
        2 => f2(d, x, k, spec),
        3 => f3(d, x, k, spec),
        4 => f4(d, x, k, spec),
        _ => Err(Error::ParameterOutOfRange(format!("F index {j}"))),
    }
}

/// Target value of `F_j`: `f(k)` for `j ∈ {1,2}`, zero otherwise.
pub fn f_target(d: &HankelDomain, j: usize, k: f64) -> f64 {
    if j <= 2 {
        f_of_k(d.alpha(), k)
    } else {
        0.0
    }
}

/// `|k sin(αk)∫ₐ^∞(r/a)ᵏ G(r) dr/r + f(k)|` for `k < 0`.
///
/// The integral equals `sin(αk)[π/(αk) + 2 ln 2] = −f(k)`.
pub fn g_moment_identity_residual(d: &HankelDomain, k: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(k < 0.0) {
        return Err(Error::SpectralOutOfRange);
    }
    let a = d.a();
    let int = ray_integral(d, |r| (r / a).powf(k) * d.g_log(r), k, &[], spec)?;
    let lhs = k * (d.alpha() * k).sin() * int;
    Ok((lhs + f_of_k(d.alpha(), k)).abs())
}

/// `∫ₐ^∞ (r/a)ᵏ G(r) dr/r` and its closed form `(π/α)/k² + ln 4/k`, for tests.
pub fn g_moment_parts(d: &HankelDomain, k: f64, spec: &QuadratureSpec) -> Result<(f64, f64)> {
    let a = d.a();
    let int = integrate_singular(
        |t: f64| {
            // r/a = 1/t
            t.powf(-k - 1.0) * d.g_log(a / t)
        },
        0.0,
        1.0,
        &[0.0],
        spec,
    )?;
    Ok((int, PI / d.alpha() / (k * k) + 4f64.ln() / k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_values() {
        let al = 3.0 * PI / 4.0;
        assert_eq!(f_of_k(al, 0.0), -PI);
        assert!(f_of_k(al, PI / al).abs() < 1e-15);
        let expected = (2f64.sqrt() / 2.0) * (2.0 * 2f64.ln() - 4.0 / 3.0);
        assert!((f_of_k(al, -1.0) - expected).abs() < 1e-15);
        assert!((f_of_k(al, 1e-7) + PI).abs() < 1e-6);
    }

    #[test]
    fn g_moment() {
        let spec = QuadratureSpec::default();
        let d = HankelDomain::new(1.0, PI).unwrap();
        assert!(g_moment_identity_residual(&d, -1.0, &spec).unwrap() < 1e-9);
        let d = HankelDomain::new(1.0, 3.0 * PI / 4.0).unwrap();
        assert!(g_moment_identity_residual(&d, -2.0, &spec).unwrap() < 1e-9);
        let (num, closed) = g_moment_parts(&d, -2.0, &spec).unwrap();
        assert!((num - closed).abs() < 1e-9);
        assert!(g_moment_identity_residual(&d, 0.5, &spec).is_err());
    }
}
