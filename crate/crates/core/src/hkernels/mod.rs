//! The h-integrals in κ-coordinates and the κ-form of `F₁…F₄`.
//!
//! With `v = e^{iψ}` (`ψ = pφ`), `y = (ρ/a)^{−p}` and `κ = −k/p`:
//!
//! ```text
//! F₁ = −κh₁ + κ sin(πκ/2)[h₃(v) + h₃(−v)] − π cos κψ
//! F₂ = −κh₆ + κ sin(πκ/2)(h₄ + h₅) − π y^κ cos(πκ/2)
//! F₃ =  κh₂ + κ cos(πκ/2)[h₃(v) − h₃(−v)] + π sin κψ
//! F₄ = −κh₇ − κ cos(πκ/2)(h₄ − h₅) − π y^κ sin(πκ/2)
//! ```
//!
//! Three routes evaluate the kernels: direct quadrature, the `F̃`-based
//! closed forms, and the real forms built from `₂F₁`, `₃F₂` and `G²¹₃₃`.

pub mod closed;
pub mod lemma;
pub mod numeric;
pub mod section5;

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::HankelDomain;
use crate::quadrature::QuadratureSpec;

pub use lemma::{direct_pv_power_integral, pv_power_integral, Path};

/// Arguments of the h-kernels: real `κ > −1`, the angle `ψ` of
/// `v = e^{iψ}` with `|ψ| < π/2`, and `y ∈ (0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KappaArgs {
    pub kappa: f64,
    pub psi: f64,
    pub y: f64,
}

impl KappaArgs {
    pub fn new(kappa: f64, psi: f64, y: f64) -> Result<Self> {
        let a = KappaArgs { kappa, psi, y };
        a.validate()?;
        Ok(a)
    }

    /// κ-coordinates of `(k, φ, ρ)` in the domain `d`.
    pub fn from_domain(d: &HankelDomain, k: f64, phi: f64, rho: f64) -> Result<Self> {
        if !(phi.abs() < d.alpha()) || !(rho > d.a()) {
            return Err(Error::OutsideDomain);
        }
        Self::new(-k / d.p(), d.p() * phi, (rho / d.a()).powf(-d.p()))
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.kappa > -1.0) || !self.kappa.is_finite() {
            return Err(Error::ParameterOutOfRange(format!("kappa = {} must exceed -1", self.kappa)));
        }
        if !(self.psi.abs() < 0.5 * PI) {
            return Err(Error::ParameterOutOfRange(format!("psi = {} outside (-pi/2, pi/2)", self.psi)));
        }
        if !(self.y > 0.0 && self.y < 1.0) {
            return Err(Error::ParameterOutOfRange(format!("y = {} outside (0, 1)", self.y)));
        }
        Ok(())
    }

    pub fn v(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.psi)
    }
}

/// Real part of a closed-form evaluation and the imaginary residual that
/// the branch bookkeeping should cancel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HValue {
    pub value: f64,
    pub imag: f64,
}

impl From<Complex64> for HValue {
    fn from(z: Complex64) -> Self {
        HValue { value: z.re, imag: z.im }
    }
}

/// How the kernels are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    #[default]
    Numeric,
    Closed,
    /// Real `₂F₁`/`₃F₂`/Meijer forms for `h₁, h₂, h₅, h₆, h₇`; `h₃, h₄`
    /// from the closed forms.
    Section5,
}

fn check_j(j: usize, range: &[usize]) -> Result<()> {
    if range.contains(&j) {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(format!("kernel index {j}")))
    }
}

/// Largest offset of the symmetric Richardson limit at a removable
/// singularity; the closed forms lose about `ε/δ²` there, so the offsets are
/// kept moderate and the extrapolation carried to order `δ⁶`.
const DELTA: f64 = 0.04;

/// `f(κ)`, falling back to a symmetric Richardson limit when `κ` sits at a
/// removable singularity of the formula (listed in `poles`) or the formula
/// reports a parameter pole there.
fn regularized<T, F>(kappa: f64, poles: &[f64], f: F) -> Result<T>
where
    T: Copy + std::ops::Add<Output = T> + std::ops::Sub<Output = T> + std::ops::Mul<f64, Output = T>,
    F: Fn(f64) -> Result<T>,
{
    let at_pole = poles.iter().any(|&q| (kappa - q).abs() < 1e-9);
    if !at_pole {
        match f(kappa) {
            Err(Error::PoleAtNonpositiveInteger) | Err(Error::ParameterPole(_)) => {}
            other => return other,
        }
    }
    let mid = |dl: f64| -> Result<T> { Ok((f(kappa + dl)? + f(kappa - dl)?) * 0.5) };
    let m1 = mid(DELTA)?;
    let m2 = mid(0.5 * DELTA)?;
    let m3 = mid(0.25 * DELTA)?;
    let r1 = m2 * (4.0 / 3.0) - m1 * (1.0 / 3.0);
    let r2 = m3 * (4.0 / 3.0) - m2 * (1.0 / 3.0);
    Ok(r2 * (16.0 / 15.0) - r1 * (1.0 / 15.0))
}

/// `h_j` by direct quadrature.
pub fn h(j: usize, args: &KappaArgs, spec: &QuadratureSpec) -> Result<f64> {
    check_j(j, &[1, 2, 3, 4, 5, 6, 7])?;
    args.validate()?;
    let KappaArgs { kappa, psi, y } = *args;
    match j {
        1 => numeric::h1(kappa, psi, spec),
        2 => numeric::h2(kappa, psi, spec),
        3 => numeric::h3(kappa, psi.sin(), spec),
        4 => numeric::h4(kappa, y, spec),
        5 => numeric::h5(kappa, y, spec),
        6 => numeric::h6(kappa, y, spec),
        _ => numeric::h7(kappa, y, spec),
    }
}

/// `h₃(κ, −v)` by direct quadrature.
pub fn h3_reflected(args: &KappaArgs, spec: &QuadratureSpec) -> Result<f64> {
    args.validate()?;
    numeric::h3(args.kappa, -args.psi.sin(), spec)
}

fn closed_raw(j: usize, args: &KappaArgs, kappa: f64) -> Result<Complex64> {
    let v = args.v();
    let y = args.y;
    match j {
        1 => closed::h1(kappa, v),
        2 => closed::h2(kappa, v),
        3 => closed::h3(kappa, v),
        4 => closed::h4(kappa, y),
        5 => closed::h5(kappa, y),
        6 => closed::h6(kappa, y),
        7 => closed::h7(kappa, y),
        // h₃ at −v
        _ => closed::h3(kappa, -v),
    }
}

/// `h_j` from the `F̃` closed forms.
pub fn h_closed(j: usize, args: &KappaArgs) -> Result<HValue> {
    check_j(j, &[1, 2, 3, 4, 5, 6, 7])?;
    args.validate()?;
    regularized(args.kappa, &[0.0], |k| closed_raw(j, args, k)).map(HValue::from)
}

/// `h₃(κ, −v)` from the closed form.
pub fn h3_reflected_closed(args: &KappaArgs) -> Result<HValue> {
    args.validate()?;
    regularized(args.kappa, &[0.0], |k| closed_raw(8, args, k)).map(HValue::from)
}

/// `h_j`, `j ∈ {1, 2, 5, 6, 7}`, from the real hypergeometric and Meijer
/// forms. `h₁` and `h₂` need `ψ ≠ 0`.
pub fn h_section5(j: usize, args: &KappaArgs) -> Result<f64> {
    check_j(j, &[1, 2, 5, 6, 7])?;
    args.validate()?;
    let KappaArgs { kappa, psi, y } = *args;
    let nearest = kappa.round();
    let poles: Vec<f64> = match j {
        6 if nearest >= 0.0 && nearest as i64 % 2 == 0 => vec![nearest],
        7 if nearest >= 1.0 && nearest as i64 % 2 == 1 => vec![nearest],
        _ => vec![0.0],
    };
    let poles = if poles.contains(&0.0) { poles } else { [poles, vec![0.0]].concat() };
    regularized(kappa, &poles, |k| match j {
        1 => section5::h1(k, psi),
        2 => section5::h2(k, psi),
        5 => section5::h5(k, y),
        6 => section5::h6(k, y),
        _ => section5::h7(k, y),
    })
}

/// The printed real form of `h₆` (half the true value).
pub fn h6_as_printed(args: &KappaArgs) -> Result<f64> {
    args.validate()?;
    let kappa = args.kappa;
    let nearest = kappa.round();
    let mut poles = vec![0.0];
    if nearest > 0.0 && nearest as i64 % 2 == 0 {
        poles.push(nearest);
    }
    regularized(kappa, &poles, |k| section5::h6_as_printed(k, args.y))
}

/// The printed real form of `h₂` (wrong coefficient on the Meijer terms).
pub fn h2_as_printed(args: &KappaArgs) -> Result<f64> {
    args.validate()?;
    regularized(args.kappa, &[0.0], |k| section5::h2_as_printed(k, args.psi))
}

/// The seven kernels plus `h₃(−v)`, as complex values.
struct Kernels {
    h: [Complex64; 7],
    h3m: Complex64,
}

fn kernels(args: &KappaArgs, route: Route, spec: &QuadratureSpec) -> Result<Kernels> {
    let re = |x: f64| Complex64::new(x, 0.0);
    let mut h_ = [Complex64::default(); 7];
    let h3m;
    match route {
        Route::Numeric => {
            for (j, slot) in h_.iter_mut().enumerate() {
                *slot = re(h(j + 1, args, spec)?);
            }
            h3m = re(h3_reflected(args, spec)?);
        }
        Route::Closed | Route::Section5 => {
            for (j, slot) in h_.iter_mut().enumerate() {
                let hv = h_closed(j + 1, args)?;
                *slot = Complex64::new(hv.value, hv.imag);
            }
            let hv = h3_reflected_closed(args)?;
            h3m = Complex64::new(hv.value, hv.imag);
            if route == Route::Section5 {
                for j in [1, 2, 5, 6, 7] {
                    h_[j - 1] = re(h_section5(j, args)?);
                }
            }
        }
    }
    Ok(Kernels { h: h_, h3m })
}

/// `F_j` in κ-coordinates. The value is the real part of the assembly and
/// `imag` its imaginary residual (zero for the quadrature route).
pub fn f_kappa(j: usize, args: &KappaArgs, route: Route, spec: &QuadratureSpec) -> Result<HValue> {
    check_j(j, &[1, 2, 3, 4])?;
    args.validate()?;
    let KappaArgs { kappa: k, psi, y } = *args;
    if k == 0.0 {
        let value = if j <= 2 { -PI } else { 0.0 };
        return Ok(HValue { value, imag: 0.0 });
    }
    let kk = kernels(args, route, spec)?;
    let [h1, h2, h3, h4, h5, h6, h7] = kk.h;
    let h3m = kk.h3m;
    let s = (PI * k / 2.0).sin();
    let c = (PI * k / 2.0).cos();
    let yk = y.powf(k);
    let z = match j {
        1 => -k * h1 + k * s * (h3 + h3m) - PI * (k * psi).cos(),
        2 => -k * h6 + k * s * (h4 + h5) - PI * yk * c,
        3 => k * h2 + k * c * (h3 - h3m) + PI * (k * psi).sin(),
        _ => -k * h7 - k * c * (h4 - h5) - PI * yk * s,
    };
    Ok(z.into())
}
