//! Residual checks for the global-relation identities and the special
//! function identities they imply.
//!
//! Every check returns `LHS − RHS`; suites collect the residuals over a
//! parameter grid into a [`ResidualReport`].
//!
//! Notation: `d = y − 1/y`, `w = −4/d²`, `F_b(z) = ₂F₁(1, b; b+1; z)` and
//! `₃F₂(b₁, b₂; w) = ₃F₂(½, 1, 1; b₁, b₂; w)`.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::HankelDomain;
use crate::globalrel::{f_j, f_target};
use crate::hkernels::{f_kappa, h3_reflected_closed, h_closed, KappaArgs, Route};
use crate::quadrature::QuadratureSpec;
use crate::specfun::{hyp2f1_1b, hyp3f2_half11, meijer_g2133, meijer_g2133_with, MbContour};

type C = Complex64;

/// Default identity tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

/// Shift applied to grid values of `k` that sit on a removable pole.
pub const POLE_SHIFT: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Residuals of one identity over a parameter grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub identity_id: String,
    /// One record of named parameters per grid point.
    pub grid: Vec<BTreeMap<String, f64>>,
    /// `[re, im]` per grid point.
    pub residuals: Vec<[f64; 2]>,
    pub max_abs: f64,
    pub rms: f64,
    pub max_imag: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    /// Auxiliary statistics, e.g. the gap between two evaluation routes.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub aux: BTreeMap<String, f64>,
}

impl ResidualReport {
    pub fn new(identity_id: &str, rows: Vec<(BTreeMap<String, f64>, C)>, tolerance: f64) -> Self {
        let n = rows.len().max(1) as f64;
        let max_abs = rows.iter().map(|(_, r)| r.norm()).fold(0.0, f64::max);
        let max_imag = rows.iter().map(|(_, r)| r.im.abs()).fold(0.0, f64::max);
        let rms = (rows.iter().map(|(_, r)| r.norm_sqr()).sum::<f64>() / n).sqrt();
        let verdict = if max_abs <= tolerance { Verdict::Pass } else { Verdict::Fail };
        let (grid, residuals) = rows.into_iter().map(|(g, r)| (g, [r.re, r.im])).unzip();
        ResidualReport {
            identity_id: identity_id.to_string(),
            grid,
            residuals,
            max_abs,
            rms,
            max_imag,
            tolerance,
            verdict,
            aux: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

fn point(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn re(x: f64) -> C {
    C::new(x, 0.0)
}

fn f21(b: f64, z: f64) -> Result<C> {
    Ok(hyp2f1_1b(re(b), re(z))?.value)
}

fn f32(b1: f64, b2: f64, w: f64) -> Result<f64> {
    Ok(hyp3f2_half11(b1, b2, w)?.value.re)
}

fn check_y(y: f64) -> Result<()> {
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::ParameterOutOfRange(format!("y = {y} outside (0, 1)")));
    }
    Ok(())
}

fn check_k(k: f64) -> Result<()> {
    if !(k > -1.0) {
        return Err(Error::ParameterOutOfRange(format!("k = {k} must exceed -1")));
    }
    Ok(())
}

/// `k` moved off a removable pole by [`POLE_SHIFT`].
pub fn patch_pole(k: f64, poles: &[f64]) -> f64 {
    if poles.iter().any(|&q| (k - q).abs() < 1e-12) {
        k + POLE_SHIFT
    } else {
        k
    }
}

// ---------------------------------------------------------------------------
// F₄ = 0 in real form

/// Residual of the identity obtained from `F₄ = 0`:
///
/// ```text
/// 2/((k+1)d²) ₃F₂((1−k)/2, (3+k)/2; w) + (k → −k)
///   = πyᵏ/(y + 1/y)·(i + tan(πk/2)) + T(y) + T(1/y),
/// T(y) = y/(y² − y⁻²)·{[F_k(y) − F_k(−y)]/k − [F_{k+2}(y) − F_{k+2}(−y)]/(k+2)}
/// ```
///
/// The `πyᵏ` term enters once; only the braces are symmetrized.
pub fn check_ident1(k: f64, y: f64) -> Result<C> {
    check_k(k)?;
    check_y(y)?;
    let d = y - 1.0 / y;
    let d2 = d * d;
    let w = -4.0 / d2;
    let lhs = 2.0 / ((k + 1.0) * d2) * f32((1.0 - k) / 2.0, (3.0 + k) / 2.0, w)?
        + 2.0 / ((1.0 - k) * d2) * f32((1.0 + k) / 2.0, (3.0 - k) / 2.0, w)?;
    let lead = PI * y.powf(k) / (y + 1.0 / y) * C::new((PI * k / 2.0).tan(), 1.0);
    let t = |y: f64| -> Result<C> {
        let b1 = (f21(k, y)? - f21(k, -y)?) / k;
        let b2 = (f21(k + 2.0, y)? - f21(k + 2.0, -y)?) / (k + 2.0);
        Ok(y / (y * y - 1.0 / (y * y)) * (b1 - b2))
    };
    Ok(re(lhs) - lead - t(y)? - t(1.0 / y)?)
}

// ---------------------------------------------------------------------------
// F₂ = f(k) in real form

/// Residual of the identity obtained from `F₂ = f(k)`:
///
/// ```text
/// 4/((k+2)d²) ₃F₂(−k/2, 2 + k/2; w) + (k → −k)
///   = 2πy₋ᵏ(i − cot(πk/2)) + U(y) + U(1/y),
/// U(y) = 2y⁻¹/(y⁻¹ − y)·{[F_k(1/y) + F_k(−1/y)]/k − [F_{k+2}(1/y) + F_{k+2}(−1/y)]/(k+2)}
/// ```
///
/// with `y₋ = min(y, 1/y)`, so the check is symmetric in `y ↔ 1/y` and
/// valid for any `y > 0`, `y ≠ 1`.
pub fn check_f2_identity(k: f64, y: f64) -> Result<C> {
    check_k(k)?;
    if !(y > 0.0) || y == 1.0 {
        return Err(Error::ParameterOutOfRange(format!("y = {y}")));
    }
    let d = y - 1.0 / y;
    let d2 = d * d;
    let w = -4.0 / d2;
    let lhs = 4.0 / ((k + 2.0) * d2) * f32(-k / 2.0, 2.0 + k / 2.0, w)?
        + 4.0 / ((2.0 - k) * d2) * f32(k / 2.0, 2.0 - k / 2.0, w)?;
    let ys = y.min(1.0 / y);
    let lead = 2.0 * PI * ys.powf(k) * C::new(-1.0 / (PI * k / 2.0).tan(), 1.0);
    let u = |y: f64| -> Result<C> {
        let iy = 1.0 / y;
        let b1 = (f21(k, iy)? + f21(k, -iy)?) / k;
        let b2 = (f21(k + 2.0, iy)? + f21(k + 2.0, -iy)?) / (k + 2.0);
        Ok(2.0 * iy / (iy - y) * (b1 - b2))
    };
    Ok(re(lhs) - lead - u(y)? - u(1.0 / y)?)
}

// ---------------------------------------------------------------------------
// k = 2

/// `₃F₂(½, 1, 1; −½, 5/2; −z²)`.
pub fn k2_lhs(z: f64) -> Result<f64> {
    f32(-0.5, 2.5, -z * z)
}

/// `(3/z²){(4 + 3z²)/√(1 + z²)·asinh(z)/z − 4}`, by its Taylor series near 0.
pub fn k2_rhs(z: f64) -> f64 {
    let z2 = z * z;
    if z.abs() < 0.02 {
        return 1.0 + z2 * (2.0 / 5.0 + z2 * (-24.0 / 35.0 + z2 * (16.0 / 21.0 - z2 * 128.0 / 165.0)));
    }
    3.0 / z2 * ((4.0 + 3.0 * z2) / (1.0 + z2).sqrt() * z.asinh() / z - 4.0)
}

/// `|LHS − RHS|` of the `k = 2` identity.
pub fn check_k2(z: f64) -> Result<f64> {
    Ok((k2_lhs(z)? - k2_rhs(z)).abs())
}

// ---------------------------------------------------------------------------
// k = 1/2

/// `(4/d²)[₃F₂(¼, 7/4; w) + 3·₃F₂(¾, 5/4; w)]`.
pub fn khalf_lhs(y: f64) -> Result<f64> {
    check_y(y)?;
    let d = y - 1.0 / y;
    let w = -4.0 / (d * d);
    Ok(4.0 / (d * d) * (f32(0.25, 1.75, w)? + 3.0 * f32(0.75, 1.25, w)?))
}

/// Principal `tanh⁻¹` on the real line, continued below the cut for `x > 1`.
fn atanh_c(x: f64) -> C {
    if x.abs() < 1.0 {
        re(x.atanh())
    } else {
        C::new(0.5 * ((x + 1.0) / (x - 1.0)).abs().ln(), -x.signum() * FRAC_PI_2)
    }
}

/// `3(1+i)πy^{3/2}/(y²+1) + 6√y/(y²+1)[y(tanh⁻¹(1/√y) − tan⁻¹(1/√y)) + tanh⁻¹√y − tan⁻¹√y]`.
pub fn khalf_rhs(y: f64) -> Result<C> {
    check_y(y)?;
    let r = y.sqrt();
    let q = y * y + 1.0;
    let lead = C::new(1.0, 1.0) * (3.0 * PI * y.powf(1.5) / q);
    let inner = y * (atanh_c(1.0 / r) - (1.0 / r).atan()) + atanh_c(r) - r.atan();
    Ok(lead + inner * (6.0 * r / q))
}

/// `LHS − RHS` of the `k = ½` identity; the imaginary part certifies that
/// the `(1+i)π` term cancels the continuation of `tanh⁻¹(1/√y)`.
pub fn check_khalf(y: f64) -> Result<C> {
    Ok(re(khalf_lhs(y)?) - khalf_rhs(y)?)
}

// ---------------------------------------------------------------------------
// k = 4

/// `₃F₂(½, 1, 1; −3/2, 7/2; w)`.
pub fn k4_lhs(y: f64) -> Result<f64> {
    check_y(y)?;
    let d = y - 1.0 / y;
    f32(-1.5, 3.5, -4.0 / (d * d))
}

/// `5(y² − 1)²/(6y⁵(y² + 1))·[3L(y⁸ + y⁶ + y⁴ + y² + 1) − 2y(3y⁶ + 4y⁴ + 4y² + 3)]`,
/// `L = ln((1 + y)/(1 − y))`.
pub fn k4_rhs(y: f64) -> Result<f64> {
    check_y(y)?;
    let y2 = y * y;
    let l = 2.0 * y.atanh();
    let poly1 = 1.0 + y2 * (1.0 + y2 * (1.0 + y2 * (1.0 + y2)));
    let poly2 = 3.0 + y2 * (4.0 + y2 * (4.0 + 3.0 * y2));
    let bracket = 3.0 * l * poly1 - 2.0 * y * poly2;
    Ok(5.0 * (y2 - 1.0).powi(2) / (6.0 * y.powi(5) * (y2 + 1.0)) * bracket)
}

/// The right side of the `k = 4` identity in its printed form, which does not
/// match the left side.
pub fn k4_rhs_printed(y: f64) -> Result<f64> {
    check_y(y)?;
    let y2 = y * y;
    let d = y - 1.0 / y;
    let l = ((1.0 + y) / (1.0 - y)).ln();
    let inner = (y2 * y2 + y2 + 1.0) / (2.0 * (y2 + 1.0)) * (2.0 * y / (1.0 - y2)).asinh()
        + (y2 + 1.0) / (2.0 * y2 * (y2 + 1.0)) * l
        - (y2 + 1.0) / y
        - y / 3.0;
    Ok(5.0 * d * d / y * inner)
}

/// `|LHS − RHS|` of the `k = 4` identity.
pub fn check_k4(y: f64) -> Result<f64> {
    Ok((k4_lhs(y)? - k4_rhs(y)?).abs())
}

// ---------------------------------------------------------------------------
// Meijer G

fn check_b(b: f64) -> Result<()> {
    if !(b > 0.0 && b < FRAC_PI_2) {
        return Err(Error::ParameterOutOfRange(format!("b = {b} outside (0, pi/2)")));
    }
    Ok(())
}

/// `G(cos²b | 1, (1+k)/2, (3−k)/2; 1, 1, ½) + (k → −k)`.
pub fn meijer_lhs(k: f64, b: f64) -> Result<f64> {
    meijer_lhs_with(k, b, MbContour::default())
}

fn meijer_lhs_with(k: f64, b: f64, contour: MbContour) -> Result<f64> {
    check_k(k)?;
    check_b(b)?;
    let x = b.cos().powi(2);
    let g = |a2: f64, a3: f64| -> Result<f64> {
        Ok(meijer_g2133_with(x, [1.0, a2, a3], [1.0, 1.0, 0.5], contour)?.re)
    };
    Ok(g((1.0 + k) / 2.0, (3.0 - k) / 2.0)? + g((1.0 - k) / 2.0, (3.0 + k) / 2.0)?)
}

/// Right side of the Meijer identity for `v = e^{ib}`:
///
/// ```text
/// (v + 1/v)²/(i√π(v − 1/v))·{−(1/π)cos(πk/2)·B − (i/2)(vᵏ − v⁻ᵏ)}
/// B = ln|w − 1| − ln|w + 1| − k[h₃(k, v) − h₃(k, −v)],  w = sin b
/// ```
pub fn meijer_rhs(k: f64, b: f64) -> Result<f64> {
    check_k(k)?;
    check_b(b)?;
    let args = KappaArgs::new(k, b, 0.5)?;
    let h3p = h_closed(3, &args)?.value;
    let h3m = h3_reflected_closed(&args)?.value;
    let w = b.sin();
    let bb = (w - 1.0).abs().ln() - (w + 1.0).ln() - k * (h3p - h3m);
    // (v + 1/v)²/(i√π(v − 1/v)) = −2cos²b/(√π sin b); −(i/2)(vᵏ − v⁻ᵏ) = sin kb
    let pre = -2.0 * b.cos().powi(2) / (PI.sqrt() * b.sin());
    Ok(pre * (-(PI * k / 2.0).cos() / PI * bb + (k * b).sin()))
}

/// Right side of the Meijer identity in its printed form.
pub fn meijer_rhs_printed(k: f64, b: f64) -> Result<C> {
    check_k(k)?;
    check_b(b)?;
    let i = C::i();
    let v = C::from_polar(1.0, b);
    let iv = v.inv();
    let s = v + iv;
    let f = |bb: f64, z: C| -> Result<C> { Ok(hyp2f1_1b(re(bb), z)?.value) };
    let t1 = |v: C| -> Result<C> { Ok(2.0 * v / s * f(2.0 + k, i * v)?) };
    let t2 = |v: C| -> Result<C> {
        let vi = v.inv();
        Ok((v * v - 1.0) / (i * (v - vi)) * f(k + 1.0, i * vi)?)
    };
    let part1 = (t1(v)? - t1(iv)?).re / (k + 2.0);
    let part2 = (t2(v)? - t2(iv)?).re / (k + 1.0);
    let brace = re(2.0 / PI * (PI * k / 2.0).cos() * (part1 - part2)) - i / 2.0 * (v.powf(k) - v.powf(-k));
    Ok(s * s / (i * PI.sqrt() * (v - iv)) * brace)
}

/// `LHS − RHS` of the Meijer identity at `v = e^{ib}`.
pub fn check_meijer(k: f64, b: f64) -> Result<C> {
    Ok(re(meijer_lhs(k, b)? - meijer_rhs(k, b)?))
}

/// `G(cos²b | 1, ½, 3/2; 1, 1, ½)`.
pub fn meijer_k0_lhs(b: f64) -> Result<f64> {
    check_b(b)?;
    Ok(meijer_g2133(b.cos().powi(2), [1.0, 0.5, 1.5], [1.0, 1.0, 0.5])?.re)
}

/// `(2/π^{3/2}) cos b · cot b · ln(cos b/(1 + sin b))`.
pub fn meijer_k0_rhs(b: f64) -> f64 {
    2.0 / PI.powf(1.5) * b.cos() / b.tan() * (b.cos() / (1.0 + b.sin())).ln()
}

/// `|LHS − RHS|` of the `k = 0` Meijer identity.
pub fn check_meijer_k0(b: f64) -> Result<f64> {
    Ok((meijer_k0_lhs(b)? - meijer_k0_rhs(b)).abs())
}

/// Largest change of the `k = 0` Meijer value under moving the
/// Mellin–Barnes contour (crossing point and arm tilt).
pub fn meijer_contour_shift(b: f64) -> Result<f64> {
    let base = meijer_k0_lhs(b)?;
    let x = b.cos().powi(2);
    let mut gap: f64 = 0.0;
    for contour in [
        MbContour { gap_fraction: 0.25, tilt: PI / 4.0 },
        MbContour { gap_fraction: 0.75, tilt: PI / 4.0 },
        MbContour { gap_fraction: 0.5, tilt: PI / 3.0 },
        MbContour { gap_fraction: 0.4, tilt: PI / 6.0 },
    ] {
        let g = meijer_g2133_with(x, [1.0, 0.5, 1.5], [1.0, 1.0, 0.5], contour)?.re;
        gap = gap.max((g - base).abs());
    }
    // the same for the general identity's left side at a non-trivial k
    let base = meijer_lhs(0.5, b)?;
    let moved = meijer_lhs_with(0.5, b, MbContour { gap_fraction: 0.3, tilt: PI / 3.0 })?;
    Ok(gap.max((moved - base).abs()))
}

// ---------------------------------------------------------------------------
// F₁ = F₂ = f(k), F₃ = F₄ = 0

/// A boundary point for the F-functionals: `F₁, F₃` are taken at the angle
/// `phi`, `F₂, F₄` at the radius `rho`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FPoint {
    pub phi: f64,
    pub rho: f64,
}

/// `n` interior boundary points: angles spread over `(−α, α)` avoiding 0,
/// radii spread geometrically over `(1.05a, 50a)`.
pub fn default_f_points(d: &HankelDomain, n: usize) -> Vec<FPoint> {
    (0..n)
        .map(|i| {
            let t = (i as f64 + 0.5) / n as f64;
            FPoint {
                phi: d.alpha() * (-0.93 + 1.86 * t) + 1e-3,
                rho: d.a() * 1.05 * (50.0f64 / 1.05).powf(t),
            }
        })
        .collect()
}

/// Default spectral grid for the F-identities: `{−0.75, −0.25, p/2}`.
pub fn default_f_kgrid(d: &HankelDomain) -> Vec<f64> {
    vec![-0.75, -0.25, 0.5 * d.p()]
}

/// `F_j − target` through the physical `(r, θ)` route and the κ route.
///
/// Residuals are those of the physical route; `aux` records the largest
/// gap between the two routes (`route_gap`), the largest κ-route residual
/// (`kappa_max_abs`) and its largest imaginary residual (`kappa_max_imag`).
pub fn check_f_identities(
    d: &HankelDomain,
    k_grid: &[f64],
    points: &[FPoint],
    spec: &QuadratureSpec,
    tolerance: f64,
) -> Result<ResidualReport> {
    let jobs: Vec<(f64, FPoint, usize)> = k_grid
        .iter()
        .flat_map(|&k| points.iter().flat_map(move |&pt| (1..=4).map(move |j| (k, pt, j))))
        .collect();
    let out: Vec<(BTreeMap<String, f64>, C, f64, f64, f64)> = jobs
        .par_iter()
        .map(|&(k, pt, j)| {
            let x = if j % 2 == 1 { pt.phi } else { pt.rho };
            let target = f_target(d, j, k);
            let phys = f_j(d, j, x, k, spec)?;
            let args = KappaArgs::from_domain(d, k, pt.phi, pt.rho)?;
            let kap = f_kappa(j, &args, Route::Closed, spec)?;
            let row = point(&[("j", j as f64), ("k", k), ("x", x)]);
            Ok((row, re(phys - target), (phys - kap.value).abs(), (kap.value - target).abs(), kap.imag.abs()))
        })
        .collect::<Result<_>>()?;
    let route_gap = out.iter().map(|o| o.2).fold(0.0, f64::max);
    let kappa_max = out.iter().map(|o| o.3).fold(0.0, f64::max);
    let kappa_imag = out.iter().map(|o| o.4).fold(0.0, f64::max);
    let rows = out.into_iter().map(|o| (o.0, o.1)).collect();
    let mut rep = ResidualReport::new("F", rows, tolerance);
    rep.aux.insert("route_gap".into(), route_gap);
    rep.aux.insert("kappa_max_abs".into(), kappa_max);
    rep.aux.insert("kappa_max_imag".into(), kappa_imag);
    if kappa_max > tolerance {
        rep.verdict = Verdict::Fail;
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Suites

/// Default `k` grid of the general identities.
pub const DEFAULT_KGRID: [f64; 6] = [-0.75, -0.25, 0.5, 1.0, 2.0, 4.0];
/// Default `y` grid.
pub const DEFAULT_YGRID: [f64; 5] = [0.1, 0.25, 0.5, 0.75, 0.9];
/// Default `z` grid of the `k = 2` identity.
pub const DEFAULT_ZGRID: [f64; 3] = [0.25, 1.0, 3.0];
/// Default angle grid of the Meijer identities.
pub const DEFAULT_BGRID: [f64; 3] = [PI / 8.0, PI / 4.0, 3.0 * PI / 8.0];

/// Which identities to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    F,
    Ident1,
    K2,
    Khalf,
    K4,
    F2id,
    Meijer,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "F" | "f" => Suite::F,
            "ident1" => Suite::Ident1,
            "k2" => Suite::K2,
            "khalf" => Suite::Khalf,
            "k4" => Suite::K4,
            "F2id" | "f2id" => Suite::F2id,
            "meijer" => Suite::Meijer,
            "all" => Suite::All,
            other => return Err(Error::Config(format!("unknown suite {other:?}"))),
        })
    }
}

fn sweep<T, F>(id: &str, params: &[T], tolerance: f64, f: F) -> Result<ResidualReport>
where
    T: Sync,
    F: Fn(&T) -> Result<(BTreeMap<String, f64>, C)> + Sync + Send,
{
    let rows = params.par_iter().map(f).collect::<Result<Vec<_>>>()?;
    Ok(ResidualReport::new(id, rows, tolerance))
}

fn ky_grid() -> Vec<(f64, f64)> {
    DEFAULT_KGRID
        .iter()
        .flat_map(|&k| DEFAULT_YGRID.iter().map(move |&y| (k, y)))
        .collect()
}

/// `check_ident1` over the default grid, with `k = 0` and odd `k` patched.
pub fn ident1_report(tolerance: f64) -> Result<ResidualReport> {
    sweep("ident1", &ky_grid(), tolerance, |&(k, y)| {
        let ke = patch_pole(k, &[0.0, 1.0, 3.0, 5.0]);
        Ok((point(&[("k", ke), ("y", y)]), check_ident1(ke, y)?))
    })
}

/// `check_f2_identity` over the default grid, with even `k` patched.
pub fn f2id_report(tolerance: f64) -> Result<ResidualReport> {
    sweep("F2id", &ky_grid(), tolerance, |&(k, y)| {
        let ke = patch_pole(k, &[0.0, 2.0, 4.0, 6.0]);
        Ok((point(&[("k", ke), ("y", y)]), check_f2_identity(ke, y)?))
    })
}

pub fn k2_report(tolerance: f64) -> Result<ResidualReport> {
    sweep("k2", &DEFAULT_ZGRID, tolerance, |&z| Ok((point(&[("z", z)]), re(check_k2(z)?))))
}

pub fn khalf_report(tolerance: f64) -> Result<ResidualReport> {
    sweep("khalf", &DEFAULT_YGRID, tolerance, |&y| Ok((point(&[("y", y)]), check_khalf(y)?)))
}

pub fn k4_report(tolerance: f64) -> Result<ResidualReport> {
    sweep("k4", &DEFAULT_YGRID, tolerance, |&y| Ok((point(&[("y", y)]), re(check_k4(y)?))))
}

/// The general Meijer identity on `DEFAULT_KGRID × DEFAULT_BGRID` and the
/// `k = 0` case on `DEFAULT_BGRID`.
pub fn meijer_report(tolerance: f64) -> Result<ResidualReport> {
    let mut params: Vec<(f64, f64)> = DEFAULT_KGRID
        .iter()
        .flat_map(|&k| DEFAULT_BGRID.iter().map(move |&b| (k, b)))
        .collect();
    // k = NaN marks the k = 0 closed-form case
    params.extend(DEFAULT_BGRID.iter().map(|&b| (f64::NAN, b)));
    let mut rep = sweep("meijer", &params, tolerance, |&(k, b)| {
        if k.is_nan() {
            Ok((point(&[("k0", 1.0), ("b", b)]), re(check_meijer_k0(b)?)))
        } else {
            Ok((point(&[("k", k), ("b", b)]), check_meijer(k, b)?))
        }
    })?;
    let shift = DEFAULT_BGRID
        .iter()
        .map(|&b| meijer_contour_shift(b))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    rep.aux.insert("contour_shift".into(), shift);
    Ok(rep)
}

/// Run a suite. `F` uses the domain and quadrature settings; the others are
/// independent of the domain.
pub fn run_suite(suite: Suite, d: &HankelDomain, spec: &QuadratureSpec, tolerance: f64) -> Result<Vec<ResidualReport>> {
    let f_rep = || check_f_identities(d, &default_f_kgrid(d), &default_f_points(d, 15), spec, tolerance);
    Ok(match suite {
        Suite::F => vec![f_rep()?],
        Suite::Ident1 => vec![ident1_report(tolerance)?],
        Suite::K2 => vec![k2_report(tolerance)?],
        Suite::Khalf => vec![khalf_report(tolerance)?],
        Suite::K4 => vec![k4_report(tolerance)?],
        Suite::F2id => vec![f2id_report(tolerance)?],
        Suite::Meijer => vec![meijer_report(tolerance)?],
        Suite::All => vec![
            f_rep()?,
            ident1_report(tolerance)?,
            k2_report(tolerance)?,
            khalf_report(tolerance)?,
            k4_report(tolerance)?,
            f2id_report(tolerance)?,
            meijer_report(tolerance)?,
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_statistics() {
        let rows = vec![(point(&[("k", 1.0)]), C::new(3e-7, 4e-7)), (point(&[("k", 2.0)]), re(0.0))];
        let r = ResidualReport::new("t", rows, 1e-6);
        assert!((r.max_abs - 5e-7).abs() < 1e-20);
        assert!((r.max_imag - 4e-7).abs() < 1e-20);
        assert!((r.rms - (12.5e-14f64).sqrt()).abs() < 1e-18);
        assert!(r.passed());
        let r = ResidualReport::new("t", vec![(point(&[]), re(2e-6))], 1e-6);
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn pole_patch() {
        assert_eq!(patch_pole(1.0, &[1.0]), 1.0 + POLE_SHIFT);
        assert_eq!(patch_pole(0.5, &[1.0]), 0.5);
    }

    #[test]
    fn k2_series_joins_closed_form() {
        for z in [0.019f64, 0.021] {
            let z2 = z * z;
            let direct = 3.0 / z2 * ((4.0 + 3.0 * z2) / (1.0 + z2).sqrt() * f64::asinh(z) / z - 4.0);
            assert!((k2_rhs(z) - direct).abs() < 1e-8);
        }
        assert_eq!(k2_rhs(0.0), 1.0);
    }

    #[test]
    fn suite_names() {
        assert_eq!("F2id".parse::<Suite>().unwrap(), Suite::F2id);
        assert!("nope".parse::<Suite>().is_err());
    }
}
