//! Boundary moments, the large-r asymptotics and the Hankel moment `S(s)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::data::{zeta_trace_complex, NeumannData};
use super::solve::{arc_integral, ray_integral};
use crate::error::{Error, Result};
use crate::geometry::HankelDomain;
use crate::quadrature::{integrate_adaptive, integrate_ray_with, QuadratureSpec, RayOptions};
use crate::specfun::{recip_gamma, zeta};

/// `S = ∫ₐ^∞ (g₋ − g₊) dρ/ρ + a ∫ g dφ`.
pub fn moment_s(d: &HankelDomain, data: &NeumannData, spec: &QuadratureSpec) -> Result<f64> {
    let gp = &data.g_plus;
    let gm = &data.g_minus;
    let ga = &data.g_arc;
    let ir = ray_integral(d, |r| gm(r) - gp(r), data.decay_exponent, &[], spec)?;
    let ia = arc_integral(d, |phi| ga(phi), &[], spec)?;
    Ok(ir + d.a() * ia)
}

/// `S̃ = ∫ₐ^∞ (g₊ + g₋) R(ρ) dρ/ρ − 2a ∫ g sin(pφ) dφ`.
///
/// Needs `decay_exponent + p < 0` for the weighted ray integrals.
pub fn moment_s_tilde(d: &HankelDomain, data: &NeumannData, spec: &QuadratureSpec) -> Result<f64> {
    let gp = &data.g_plus;
    let gm = &data.g_minus;
    let ga = &data.g_arc;
    let p = d.p();
    let ir = ray_integral(
        d,
        |r| (gp(r) + gm(r)) * d.r_unchecked(r),
        data.decay_exponent + p,
        &[],
        spec,
    )?;
    let ia = arc_integral(d, |phi| ga(phi) * (p * phi).sin(), &[], spec)?;
    Ok(ir - 2.0 * d.a() * ia)
}

/// `∫|g₋| + |g₊| dρ/ρ + a∫|g| dφ`, the scale against which `S` is judged.
pub(crate) fn moment_scale(d: &HankelDomain, data: &NeumannData, spec: &QuadratureSpec) -> Result<f64> {
    let gp = &data.g_plus;
    let gm = &data.g_minus;
    let ga = &data.g_arc;
    let loose = QuadratureSpec {
        rel_tol: 1e-6,
        ..spec.clone()
    };
    let ir = ray_integral(d, |r| gm(r).abs() + gp(r).abs(), data.decay_exponent, &[], &loose)?;
    let ia = arc_integral(d, |phi| ga(phi).abs(), &[0.0], &loose)?;
    Ok(ir + d.a() * ia)
}

/// Large-r form `(1/2π) G(r) S + (1/π) sin(pθ) (r/a)^{−p} S̃` from
/// precomputed moments.
pub fn asymptotic_from_moments(d: &HankelDomain, s: f64, s_tilde: f64, r: f64, theta: f64) -> f64 {
    let p = d.p();
    d.g_log(r) * s / (2.0 * PI) + (p * theta).sin() * (r / d.a()).powf(-p) * s_tilde / PI
}

/// The large-r asymptotic form of the solution at `(r, θ)`.
pub fn asymptotic(d: &HankelDomain, data: &NeumannData, r: f64, theta: f64, spec: &QuadratureSpec) -> Result<f64> {
    let s = moment_s(d, data, spec)?;
    let st = moment_s_tilde(d, data, spec)?;
    Ok(asymptotic_from_moments(d, s, st, r, theta))
}

fn check_poles(d: &HankelDomain) -> Result<()> {
    // u has poles at 2πin; the arc must stay inside |z| < 2π and the rays
    // must keep away from the imaginary axis.
    let gap = (2.0 * PI - d.a()).min(2.0 * PI * d.alpha().cos().abs());
    if gap < 1e-3 {
        return Err(Error::PoleNearContour);
    }
    Ok(())
}

/// `S(s) = −∮_H z^{s−1} u(z) dz` for a user-supplied `u`, assembled from the
/// ray and arc pieces with `g± = (ρe^{±iα})^s u` and
/// `g = −(i/a)(ae^{iφ})^s u`.
pub fn hankel_moment<U>(d: &HankelDomain, s: Complex64, u: U, spec: &QuadratureSpec) -> Result<Complex64>
where
    U: Fn(Complex64) -> Complex64,
{
    check_poles(d)?;
    let alpha = d.alpha();
    let a = d.a();
    let pow = |r: f64, th: f64| (s * Complex64::new(r.ln(), th)).exp();
    let ray = |r: f64| {
        pow(r, -alpha) * u(Complex64::from_polar(r, -alpha)) - pow(r, alpha) * u(Complex64::from_polar(r, alpha))
    };
    // Data with exponential decay: a fixed negative hint selects the
    // plain substitution.
    let opts = RayOptions::new(a, d.p(), -4.0);
    let ir: Complex64 = integrate_ray_with(ray, &opts, spec)?;
    let arc = |phi: f64| Complex64::new(0.0, -1.0 / a) * pow(a, phi) * u(Complex64::from_polar(a, phi));
    let ia: Complex64 = integrate_adaptive(arc, -alpha, alpha, spec)?;
    Ok(ir + a * ia)
}

/// `S(s)` for `u(z) = 1/(e^{−z} − 1)`.
pub fn hankel_moment_riemann(d: &HankelDomain, s: Complex64, spec: &QuadratureSpec) -> Result<Complex64> {
    check_poles(d)?;
    let (gp, gm, ga) = zeta_trace_complex(d, s);
    let opts = RayOptions::new(d.a(), d.p(), -4.0);
    let ir: Complex64 = integrate_ray_with(|r| gm(r) - gp(r), &opts, spec)?;
    let ia: Complex64 = integrate_adaptive(ga, -d.alpha(), d.alpha(), spec)?;
    Ok(ir + d.a() * ia)
}

/// The closed form `−2πi ζ(s)/Γ(1−s)` for real `s ≠ 1`.
pub fn hankel_moment_closed(s: f64) -> Result<Complex64> {
    let z = zeta(s)?;
    let rg = recip_gamma(Complex64::new(1.0 - s, 0.0));
    Ok(Complex64::new(0.0, -2.0 * PI) * z * rg)
}

/// `|S(s) + 2πi ζ(s)/Γ(1−s)|`.
pub fn zeta_relation_residual(d: &HankelDomain, s: f64, spec: &QuadratureSpec) -> Result<f64> {
    let num = hankel_moment_riemann(d, Complex64::new(s, 0.0), spec)?;
    Ok((num - hankel_moment_closed(s)?).norm())
}
