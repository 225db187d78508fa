//! Closed forms of the h-integrals in terms of
//! `F̃(κ; u) = ₂F₁(1, κ+1; κ+2; u)/(κ+1)`.
//!
//! Each function returns the complex value of the assembled expression; the
//! integrals themselves are real, so the imaginary part is a residual that
//! certifies the branch bookkeeping of the continued ₂F₁ values.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::specfun::f_tilde;

type C = Complex64;

fn c(re: f64) -> C {
    C::new(re, 0.0)
}

fn ft(kappa: f64, u: C) -> Result<C> {
    Ok(f_tilde(c(kappa), u)?.value)
}

/// `F̃(k+1; u) − F̃(k−1; u)`.
fn ft_diff(k: f64, u: C) -> Result<C> {
    Ok(ft(k + 1.0, u)? - ft(k - 1.0, u)?)
}

/// `h₃(κ, v)`, `v = e^{iψ}`; `h₃(κ, −v)` is `h3(κ, −v)`.
pub fn h3(k: f64, v: C) -> Result<C> {
    let iv = v.inv();
    let w = (v - iv) / C::new(0.0, 2.0);
    let i = C::i();
    let bracket = iv * ft_diff(k, i * iv)? + v * ft_diff(k, -i * v)?;
    Ok(((w - 1.0).norm().ln() - 1.0 / k + 2f64.ln() - bracket / (v + iv)) / k)
}

/// `h₄(κ, y)`; carries the term `iπyᵏ` whose imaginary part must be
/// discarded at assembly.
pub fn h4(k: f64, y: f64) -> Result<C> {
    let cy = 0.5 * (y + 1.0 / y);
    let bracket = ft_diff(k, c(1.0 / y))? / y - y * ft_diff(k, c(y))?;
    let val = c((cy - 1.0).abs().ln() - 1.0 / k + 2f64.ln()) + bracket / (y - 1.0 / y)
        + C::new(0.0, PI * y.powf(k));
    Ok(val / k)
}

pub fn h5(k: f64, y: f64) -> Result<C> {
    let cy = 0.5 * (y + 1.0 / y);
    let bracket = ft_diff(k, c(-1.0 / y))? / y - y * ft_diff(k, c(-y))?;
    Ok((c((cy + 1.0).ln() - 1.0 / k + 2f64.ln()) + bracket / (y - 1.0 / y)) / k)
}

/// The four-point F̃ combinations used by `h₁` and `h₂`.
struct Quad {
    /// `F̃(k±1; −i/v)`, `F̃(k±1; i/v)`, `F̃(k±1; −iv)`, `F̃(k±1; iv)`.
    up: [C; 4],
    dn: [C; 4],
}

fn quad_terms(k: f64, v: C) -> Result<Quad> {
    let i = C::i();
    let iv = v.inv();
    let args = [-i * iv, i * iv, -i * v, i * v];
    let mut up = [C::default(); 4];
    let mut dn = [C::default(); 4];
    for (j, &u) in args.iter().enumerate() {
        up[j] = ft(k + 1.0, u)?;
        dn[j] = ft(k - 1.0, u)?;
    }
    Ok(Quad { up, dn })
}

pub fn h1(k: f64, v: C) -> Result<C> {
    let iv = v.inv();
    let w = (v - iv) / C::new(0.0, 2.0);
    let q = quad_terms(k, v)?;
    let sk = (PI * k / 2.0).sin();
    let comb = |t: &[C; 4]| iv * t[0] + iv * t[1] + v * t[2] + v * t[3];
    let a = sk * ((w + 1.0).norm().ln() + (w - 1.0).norm().ln()) / k;
    let b = -sk * (comb(&q.up) - comb(&q.dn)) / (k * (v + iv));
    let e = -PI / (2.0 * k) * (v.powf(k) + v.powf(-k));
    Ok(a + b + e)
}

pub fn h2(k: f64, v: C) -> Result<C> {
    let iv = v.inv();
    let w = (v - iv) / C::new(0.0, 2.0);
    let q = quad_terms(k, v)?;
    let ck = (PI * k / 2.0).cos();
    let comb = |t: &[C; 4]| iv * t[0] - iv * t[1] - v * t[2] + v * t[3];
    let a = ck * ((w + 1.0).norm().ln() - (w - 1.0).norm().ln()) / k;
    let b = -ck * (comb(&q.up) - comb(&q.dn)) / (k * (v + iv));
    let e = -PI / (C::new(0.0, 2.0) * k) * (v.powf(k) - v.powf(-k));
    Ok(a + b + e)
}

/// Pieces shared by `h₆` and `h₇`: `(1/y)F̃(·;−1/y) − yF̃(·;−y)` and
/// `(1/y)F̃(·;1/y) − yF̃(·;y)` for `κ = k ± 1`.
fn y_terms(k: f64, y: f64) -> Result<[C; 4]> {
    let mk = |kk: f64, sgn: f64| -> Result<C> { Ok(ft(kk, c(sgn / y))? / y - y * ft(kk, c(sgn * y))?) };
    Ok([mk(k + 1.0, -1.0)?, mk(k + 1.0, 1.0)?, mk(k - 1.0, -1.0)?, mk(k - 1.0, 1.0)?])
}

pub fn h6(k: f64, y: f64) -> Result<C> {
    let cy = 0.5 * (y + 1.0 / y);
    let sk = (PI * k / 2.0).sin();
    let yk = y.powf(k);
    let a = sk * C::new((cy + 1.0).ln() + (cy - 1.0).abs().ln(), PI * yk) / k;
    let [pm, pp, mm, mp] = y_terms(k, y)?;
    let pv = sk * (pm + pp - mm - mp) / (k * (y - 1.0 / y)) - PI / k * yk * (PI * k / 2.0).cos();
    Ok(a + pv)
}

pub fn h7(k: f64, y: f64) -> Result<C> {
    let cy = 0.5 * (y + 1.0 / y);
    let ck = (PI * k / 2.0).cos();
    let yk = y.powf(k);
    let a = ck * C::new((cy + 1.0).ln() - (cy - 1.0).abs().ln(), -PI * yk) / k;
    let [pm, pp, mm, mp] = y_terms(k, y)?;
    let pv = -ck * (pm - pp - mm + mp) / (k * (y - 1.0 / y));
    // The principal-value bracket enters with the opposite sign to the
    // integration-by-parts boundary term.
    Ok(a - pv - PI / k * yk * (PI * k / 2.0).sin())
}
