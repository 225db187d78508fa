//! Real closed forms of `h₁`, `h₂`, `h₅`, `h₆`, `h₇` for real `κ`, built
//! from `₂F₁(1,b;b+1;·)` at negative argument, `₃F₂(½,1,1;b₁,b₂;w)` with
//! `w = −4/(y − 1/y)²`, and `G²¹₃₃(cos²ψ | 1, A, B; 1, 1, ½)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::specfun::{hyp2f1_1b, hyp3f2_half11, meijer_g2133};

fn f21(b: f64, z: f64) -> Result<f64> {
    Ok(hyp2f1_1b(Complex64::new(b, 0.0), Complex64::new(z, 0.0))?.value.re)
}

fn f32(b1: f64, b2: f64, x: f64) -> Result<f64> {
    Ok(hyp3f2_half11(b1, b2, x)?.value.re)
}

fn g(x: f64, a2: f64, a3: f64) -> Result<f64> {
    Ok(meijer_g2133(x, [1.0, a2, a3], [1.0, 1.0, 0.5])?.re)
}

pub fn h5(k: f64, y: f64) -> Result<f64> {
    let cy = 0.5 * (y + 1.0 / y);
    let y2 = 1.0 / (y * y);
    let t1 = (y2 * f21(k, -1.0 / y)? - f21(k, -y)?) / (k * (y2 - 1.0));
    let t2 = (y2 * f21(k + 2.0, -1.0 / y)? - f21(k + 2.0, -y)?) / ((k + 2.0) * (y2 - 1.0));
    Ok(((cy + 1.0).ln() - 1.0 / k + 2f64.ln() + t1 - t2) / k)
}

/// The `h₆` expression exactly as printed in the source derivation, which
/// is half the true value.
pub fn h6_as_printed(k: f64, y: f64) -> Result<f64> {
    let d = y - 1.0 / y;
    let d2 = d * d;
    let w = -4.0 / d2;
    let inner = d2 * (0.5 * d).abs().ln() - f32(2.0 - k / 2.0, k / 2.0, w)? / (k - 2.0)
        + f32(-k / 2.0, 2.0 + k / 2.0, w)? / (k + 2.0);
    Ok((PI * k / 2.0).sin() / (k * d2) * inner)
}

pub fn h6(k: f64, y: f64) -> Result<f64> {
    Ok(2.0 * h6_as_printed(k, y)?)
}

pub fn h7(k: f64, y: f64) -> Result<f64> {
    let cy = 0.5 * (y + 1.0 / y);
    let d = y - 1.0 / y;
    let d2 = d * d;
    let w = -4.0 / d2;
    let logs = 0.5 * ((cy - 1.0).abs().ln() - (cy + 1.0).ln());
    let hyp = f32((1.0 - k) / 2.0, (3.0 + k) / 2.0, w)? / (k + 1.0)
        - f32((3.0 - k) / 2.0, (1.0 + k) / 2.0, w)? / (k - 1.0);
    Ok(-2.0 / k * (PI * k / 2.0).cos() * (logs + (y + 1.0 / y) / d2 * hyp))
}

/// `h₁` with `v = e^{iψ}`; requires `ψ ≠ 0` (the Meijer argument `cos²ψ`
/// must differ from 1).
pub fn h1(k: f64, psi: f64) -> Result<f64> {
    let s = 2.0 * psi.cos();
    let x = psi.cos().powi(2);
    let gdiff = g(x, -k / 2.0, 2.0 + k / 2.0)? - g(x, 2.0 - k / 2.0, k / 2.0)?;
    Ok((2.0 * (PI * k / 2.0).sin() * (0.5 * s).abs().ln() + PI.powf(1.5) / (s * s) * gdiff) / k)
}

fn h2_with_coefficient(k: f64, psi: f64, coef: f64) -> Result<f64> {
    let x = psi.cos().powi(2);
    let w = psi.sin();
    let gsum = g(x, (1.0 - k) / 2.0, (3.0 + k) / 2.0)? + g(x, (3.0 - k) / 2.0, (1.0 + k) / 2.0)?;
    let logs = (w - 1.0).abs().ln() - (w + 1.0).abs().ln();
    Ok(-((PI * k / 2.0).cos() * logs - coef * gsum) / k)
}

/// `h₂` from the Meijer form, coefficient `π^{3/2}(v − 1/v)/(i(v + 1/v)²)`.
pub fn h2(k: f64, psi: f64) -> Result<f64> {
    let s = 2.0 * psi.cos();
    h2_with_coefficient(k, psi, PI.powf(1.5) * 2.0 * psi.sin() / (s * s))
}

/// `h₂` with the printed coefficient `2π^{3/2}(v − 1/v)/(i(v + 1/v))`.
pub fn h2_as_printed(k: f64, psi: f64) -> Result<f64> {
    let s = 2.0 * psi.cos();
    h2_with_coefficient(k, psi, 2.0 * PI.powf(1.5) * 2.0 * psi.sin() / s)
}
