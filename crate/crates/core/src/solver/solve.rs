//! The solution formula and its boundary traces.
//!
//! With `P = (r/a)^p`, `R(ρ) = (ρ/a)^p + (ρ/a)^{−p}`, `s = sin(pθ)` and
//! `A₀ = ¼(P − 1/P)² cos²(pθ)`,
//!
//! ```text
//! q(r,θ) = −(1/2π)∫ g₊(ρ) K₊ dρ/ρ + (1/2π)∫ g₋(ρ) K₋ dρ/ρ + (a/2π)∫ g(φ) K_arc dφ
//! K± = ln{A₀ + (R(ρ)/2 ∓ R(r)s/2)²},  K_arc = ln{A₀ + (sin pφ − R(r)s/2)²}.
//! ```

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::data::NeumannData;
use super::moments::{moment_s, moment_scale};
use crate::error::{Error, Result};
use crate::geometry::HankelDomain;
use crate::quadrature::{ln_abs_1m, integrate_ray_with, integrate_singular, QuadratureSpec, RayOptions};

/// A solution value at a point of the domain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldSample {
    pub r: f64,
    pub theta: f64,
    pub q: f64,
}

/// Which logarithmic kernel the arc trace uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcKernel {
    /// `ln|sin pφ − sin pθ|`, the form consistent with the solution formula.
    #[default]
    Printed,
    /// `ln|sin pφ + sin pθ|`.
    Mirrored,
}

/// Radius `ρ ≥ a` with `R(ρ) = c`, if any.
pub(crate) fn r_inverse(d: &HankelDomain, c: f64) -> Option<f64> {
    if !(c >= 2.0) || !c.is_finite() {
        return None;
    }
    let t = 0.5 * (c + (c * c - 4.0).sqrt());
    Some(d.a() * t.powf(1.0 / d.p()))
}

/// Angle `φ ∈ [−α, α]` with `sin(pφ) = c`, if any.
pub(crate) fn arc_inverse(d: &HankelDomain, c: f64) -> Option<f64> {
    if c.abs() > 1.0 {
        return None;
    }
    Some(c.asin() / d.p())
}

/// `∫ₐ^∞ f(ρ) dρ/ρ` under the substitution `x = (ρ/a)^{−p}`.
pub(crate) fn ray_integral<F: Fn(f64) -> f64>(
    d: &HankelDomain,
    f: F,
    decay: f64,
    singular: &[f64],
    spec: &QuadratureSpec,
) -> Result<f64> {
    let mut opts = RayOptions::new(d.a(), d.p(), decay);
    for &s in singular {
        opts = opts.with_singular(s);
    }
    integrate_ray_with(f, &opts, spec)
}

/// `∫_{−α}^{α} f(φ) dφ` with clustering at the listed angles.
pub(crate) fn arc_integral<F: Fn(f64) -> f64>(
    d: &HankelDomain,
    f: F,
    singular: &[f64],
    spec: &QuadratureSpec,
) -> Result<f64> {
    integrate_singular(f, -d.alpha(), d.alpha(), singular, spec)
}

/// Evaluate the solution at `(r, θ) ∈ D`.
pub fn solve(d: &HankelDomain, data: &NeumannData, r: f64, theta: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !d.contains(r, theta) {
        return Err(Error::OutsideDomain);
    }
    let p = d.p();
    let a = d.a();
    let big = (r / a).powf(p);
    let rr = big + 1.0 / big;
    let s = (p * theta).sin();
    let cth = (p * theta).cos();
    let a0 = 0.25 * (big - 1.0 / big).powi(2) * cth * cth;
    let half = 0.5 * rr * s;
    let decay = data.decay_exponent;

    let kernel = |c: f64| (a0 + c * c).ln();
    let sing_plus: Vec<f64> = r_inverse(d, rr * s).into_iter().collect();
    let sing_minus: Vec<f64> = r_inverse(d, -rr * s).into_iter().collect();
    let mut sing_arc: Vec<f64> = arc_inverse(d, half).into_iter().collect();
    sing_arc.extend([-d.alpha(), d.alpha()]);

    let gp = &data.g_plus;
    let gm = &data.g_minus;
    let ga = &data.g_arc;
    let ip = ray_integral(d, |rho| gp(rho) * kernel(0.5 * d.r_unchecked(rho) - half), decay, &sing_plus, spec)?;
    let im = ray_integral(d, |rho| gm(rho) * kernel(0.5 * d.r_unchecked(rho) + half), decay, &sing_minus, spec)?;
    let ia = arc_integral(d, |phi| ga(phi) * kernel((p * phi).sin() - half), &sing_arc, spec)?;
    Ok((-ip + im + a * ia) / (2.0 * PI))
}

/// Evaluate the solution on a list of points in parallel.
pub fn solve_grid(
    d: &HankelDomain,
    data: &NeumannData,
    points: &[(f64, f64)],
    spec: &QuadratureSpec,
) -> Result<Vec<FieldSample>> {
    points
        .par_iter()
        .map(|&(r, theta)| solve(d, data, r, theta, spec).map(|q| FieldSample { r, theta, q }))
        .collect()
}

/// Dirichlet trace on the arc, `q(a, θ)` for `|θ| < α`.
pub fn dirichlet_arc(
    d: &HankelDomain,
    data: &NeumannData,
    theta: f64,
    kernel: ArcKernel,
    spec: &QuadratureSpec,
) -> Result<f64> {
    if !(theta.abs() <= d.alpha()) {
        return Err(Error::OutsideDomain);
    }
    let p = d.p();
    let s = (p * theta).sin();
    let decay = data.decay_exponent;
    let gp = &data.g_plus;
    let gm = &data.g_minus;
    let ga = &data.g_arc;
    let ip = ray_integral(
        d,
        |rho| gp(rho) * (0.5 * d.r_unchecked(rho) - s).abs().ln(),
        decay,
        &r_inverse(d, 2.0 * s).into_iter().collect::<Vec<_>>(),
        spec,
    )?;
    let im = ray_integral(
        d,
        |rho| gm(rho) * (0.5 * d.r_unchecked(rho) + s).abs().ln(),
        decay,
        &r_inverse(d, -2.0 * s).into_iter().collect::<Vec<_>>(),
        spec,
    )?;
    let (sign, sing) = match kernel {
        ArcKernel::Printed => (-1.0, theta),
        ArcKernel::Mirrored => (1.0, -theta),
    };
    let ia = arc_integral(
        d,
        |phi| ga(phi) * ((p * phi).sin() + sign * s).abs().ln(),
        &[sing, -d.alpha(), d.alpha()],
        spec,
    )?;
    Ok((-ip + im + d.a() * ia) / PI)
}

/// Dirichlet trace on a ray, `q(r, ±α)` for `r > a`; `sign` is `+1` or `−1`.
pub fn dirichlet_ray(d: &HankelDomain, data: &NeumannData, r: f64, sign: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(r >= d.a()) {
        return Err(Error::OutsideDomain);
    }
    let sg = if sign >= 0.0 { 1.0 } else { -1.0 };
    let p = d.p();
    let rr = d.r_unchecked(r);
    let decay = data.decay_exponent;
    let gp = &data.g_plus;
    let gm = &data.g_minus;
    let ga = &data.g_arc;
    let ip = ray_integral(d, |rho| gp(rho) * (0.5 * rr - sg * 0.5 * d.r_unchecked(rho)).abs().ln(), decay, &[r], spec)?;
    let im = ray_integral(d, |rho| gm(rho) * (0.5 * rr + sg * 0.5 * d.r_unchecked(rho)).abs().ln(), decay, &[r], spec)?;
    let ia = arc_integral(
        d,
        |phi| ga(phi) * (0.5 * rr - sg * (p * phi).sin()).abs().ln(),
        &[-d.alpha(), d.alpha()],
        spec,
    )?;
    Ok((-ip + im + d.a() * ia) / PI)
}

/// `q(r, α) + q(r, −α)` from the G-subtracted kernels; requires `S = 0`.
pub fn dirichlet_sum(d: &HankelDomain, data: &NeumannData, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(r >= d.a()) {
        return Err(Error::OutsideDomain);
    }
    let s = moment_s(d, data, spec)?;
    let scale = moment_scale(d, data, spec)?;
    if s.abs() > 1e-8 * scale {
        return Err(Error::ConstraintViolated { s });
    }
    let p = d.p();
    let rr = d.r_unchecked(r);
    let big = (r / d.a()).powf(p);
    // ln|R_r²/4 − c| − G(r) = 2 ln(1 + P⁻²) + ln|1 − 4c/R_r²|
    let head = 2.0 * (1.0 / (big * big)).ln_1p();
    let bracket = |c4: f64| head + ln_abs_1m(c4 / (rr * rr));
    let gp = &data.g_plus;
    let gm = &data.g_minus;
    let ga = &data.g_arc;
    let ir = ray_integral(
        d,
        |rho| (gm(rho) - gp(rho)) * bracket(d.r_unchecked(rho).powi(2)),
        data.decay_exponent,
        &[r],
        spec,
    )?;
    let ia = arc_integral(
        d,
        |phi| ga(phi) * bracket(4.0 * (p * phi).sin().powi(2)),
        &[-d.alpha(), d.alpha()],
        spec,
    )?;
    Ok((ir + d.a() * ia) / PI)
}

/// `q(r, −α) − q(r, α)`.
pub fn dirichlet_diff(d: &HankelDomain, data: &NeumannData, r: f64, spec: &QuadratureSpec) -> Result<f64> {
    if !(r >= d.a()) {
        return Err(Error::OutsideDomain);
    }
    let p = d.p();
    let rr = d.r_unchecked(r);
    let gp = &data.g_plus;
    let gm = &data.g_minus;
    let ga = &data.g_arc;
    let ir = ray_integral(
        d,
        |rho| {
            let rp = d.r_unchecked(rho);
            (gm(rho) + gp(rho)) * (ln_abs_1m(rp / rr) - (rp / rr).ln_1p())
        },
        data.decay_exponent,
        &[r],
        spec,
    )?;
    let ia = arc_integral(
        d,
        |phi| {
            let t = 2.0 * (p * phi).sin() / rr;
            ga(phi) * (t.ln_1p() - ln_abs_1m(t))
        },
        &[-d.alpha(), d.alpha()],
        spec,
    )?;
    Ok((ir + d.a() * ia) / PI)
}
