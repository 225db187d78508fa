//! The h-integrals by direct quadrature.
//!
//! With `t = pθ ∈ (−π/2, π/2)`, `ψ = pφ`, `x = (r/a)^{−p}`, `y = (ρ/a)^{−p}`
//! and `c = (y + 1/y)/2`:
//!
//! ```text
//! h₁ =  ∫ cos κt ln|sin ψ + sin t| dt      h₂ = −∫ sin κt ln|sin ψ + sin t| dt
//! h₃ =  ∫₀¹ x^{κ−1} ln|1 − 2x sin ψ + x²| dx
//! h₄ =  ∫₀¹ x^{κ−1} ln|(x − y)(x − 1/y)| dx
//! h₅ =  ∫₀¹ x^{κ−1} ln((x + y)(x + 1/y)) dx
//! h₆ =  ∫ cos κt ln(c + sin t) dt           h₇ = −∫ sin κt ln(c + sin t) dt
//! ```

use std::f64::consts::FRAC_PI_2;

use crate::error::Result;
use crate::quadrature::{integrate_singular, QuadratureSpec};

fn angle<F: Fn(f64) -> f64>(f: F, singular: &[f64], spec: &QuadratureSpec) -> Result<f64> {
    let mut pts = vec![-FRAC_PI_2, FRAC_PI_2];
    pts.extend_from_slice(singular);
    integrate_singular(f, -FRAC_PI_2, FRAC_PI_2, &pts, spec)
}

/// `∫₀¹ x^{κ−1} L(x) dx` for `L(x) = O(x)` at 0, via `x = tᵐ`.
fn unit<F: Fn(f64) -> f64>(kappa: f64, l: F, singular_x: &[f64], spec: &QuadratureSpec) -> Result<f64> {
    let m = (2.0 / (kappa + 1.0)).ceil().max(1.0);
    let g = |t: f64| {
        let x = t.powf(m);
        if x == 0.0 {
            return 0.0;
        }
        m * t.powf(m * kappa - 1.0) * l(x)
    };
    let mut pts = vec![0.0, 1.0];
    pts.extend(singular_x.iter().map(|x| x.powf(1.0 / m)));
    integrate_singular(g, 0.0, 1.0, &pts, spec)
}

/// `ln|1 + e|` accurate for small `e`.
fn ln_abs_1p(e: f64) -> f64 {
    if e.abs() < 0.5 {
        e.ln_1p()
    } else {
        (1.0 + e).abs().ln()
    }
}

pub fn h1(kappa: f64, psi: f64, spec: &QuadratureSpec) -> Result<f64> {
    let s = psi.sin();
    angle(|t| (kappa * t).cos() * (s + t.sin()).abs().ln(), &[-psi], spec)
}

pub fn h2(kappa: f64, psi: f64, spec: &QuadratureSpec) -> Result<f64> {
    let s = psi.sin();
    angle(|t| -(kappa * t).sin() * (s + t.sin()).abs().ln(), &[-psi], spec)
}

/// `h₃` with `s = sin ψ`; `h₃(−v)` is `h3(κ, −s)`.
pub fn h3(kappa: f64, s: f64, spec: &QuadratureSpec) -> Result<f64> {
    // 1 − 2sx + x² vanishes only at x = 1 when s = 1.
    let sing: Vec<f64> = if s.abs() > 1.0 - 1e-6 { vec![1.0] } else { vec![] };
    unit(kappa, |x| ln_abs_1p(x * (x - 2.0 * s)), &sing, spec)
}

pub fn h4(kappa: f64, y: f64, spec: &QuadratureSpec) -> Result<f64> {
    let c2 = y + 1.0 / y;
    let l = |x: f64| {
        if x < 0.25 * y {
            ln_abs_1p(x * (x - c2))
        } else {
            ((x - y) * (x - 1.0 / y)).abs().ln()
        }
    };
    unit(kappa, l, &[y], spec)
}

pub fn h5(kappa: f64, y: f64, spec: &QuadratureSpec) -> Result<f64> {
    let c2 = y + 1.0 / y;
    unit(kappa, |x| ln_abs_1p(x * (x + c2)), &[], spec)
}

pub fn h6(kappa: f64, y: f64, spec: &QuadratureSpec) -> Result<f64> {
    let c = 0.5 * (y + 1.0 / y);
    angle(|t| (kappa * t).cos() * (c + t.sin()).ln(), &[], spec)
}

pub fn h7(kappa: f64, y: f64, spec: &QuadratureSpec) -> Result<f64> {
    let c = 0.5 * (y + 1.0 / y);
    angle(|t| -(kappa * t).sin() * (c + t.sin()).ln(), &[], spec)
}
