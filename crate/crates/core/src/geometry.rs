//! The exterior of the Hankel contour: two rays at angles `±α` from the
//! circle `|z| = a`, joined by the arc `|θ| ≤ α`. The domain `D` is
//! `{ r ≥ a, |θ| ≤ α }` and
//! `ω(z) = (i/2)[(z/a)^p − (z/a)^{−p}]`, `p = π/2α`, maps it onto the upper
//! half-plane.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative slack allowed when testing membership of `D`.
const SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDomain", into = "RawDomain")]
pub struct HankelDomain {
    a: f64,
    alpha: f64,
}

#[derive(Serialize, Deserialize)]
struct RawDomain {
    a: f64,
    alpha: f64,
}

impl TryFrom<RawDomain> for HankelDomain {
    type Error = Error;
    fn try_from(r: RawDomain) -> Result<Self> {
        HankelDomain::new(r.a, r.alpha)
    }
}

impl From<HankelDomain> for RawDomain {
    fn from(d: HankelDomain) -> Self {
        RawDomain { a: d.a, alpha: d.alpha }
    }
}

/// Upper half-plane coordinates `ω = x + iy`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MappedPoint {
    pub x: f64,
    pub y: f64,
}

impl HankelDomain {
    /// Requires `0 < a < 2π` and `π/2 < α ≤ π`.
    pub fn new(a: f64, alpha: f64) -> Result<Self> {
        if !(a > 0.0 && a < 2.0 * PI) {
            return Err(Error::InvalidDomain(format!("a = {a} must lie in (0, 2π)")));
        }
        if !(alpha > PI / 2.0 && alpha <= PI) {
            return Err(Error::InvalidDomain(format!("alpha = {alpha} must lie in (π/2, π]")));
        }
        Ok(HankelDomain { a, alpha })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The map exponent `p = π/2α`, in `[½, 1)`.
    pub fn p(&self) -> f64 {
        PI / (2.0 * self.alpha)
    }

    /// Whether `(r, θ)` lies in the closed domain (with a small slack).
    pub fn contains(&self, r: f64, theta: f64) -> bool {
        r.is_finite() && r >= self.a * (1.0 - SLACK) && theta.abs() <= self.alpha * (1.0 + SLACK)
    }

    fn check(&self, r: f64, theta: f64) -> Result<()> {
        if self.contains(r, theta) {
            Ok(())
        } else {
            Err(Error::OutsideDomain)
        }
    }

    /// `ω(z)` for `z ∈ D`.
    pub fn conformal_map(&self, z: Complex64) -> Result<Complex64> {
        let (r, theta) = z.to_polar();
        self.check(r, theta)?;
        let w = (z / self.a).ln() * self.p();
        let e = w.exp();
        Ok(Complex64::new(0.0, 0.5) * (e - e.inv()))
    }

    /// Real and imaginary parts of `ω(re^{iθ})` in closed form.
    pub fn map_xy(&self, r: f64, theta: f64) -> Result<MappedPoint> {
        self.check(r, theta)?;
        let p = self.p();
        let big = (r / self.a).powf(p);
        let pt = p * theta;
        Ok(MappedPoint {
            x: -0.5 * pt.sin() * (big + 1.0 / big),
            y: 0.5 * pt.cos() * (big - 1.0 / big),
        })
    }

    /// `R(ρ) = (ρ/a)^p + (ρ/a)^{−p}`.
    pub fn r_fn(&self, rho: f64) -> Result<f64> {
        if !(rho >= self.a * (1.0 - SLACK)) || !rho.is_finite() {
            return Err(Error::OutsideDomain);
        }
        Ok(self.r_unchecked(rho))
    }

    pub(crate) fn r_unchecked(&self, rho: f64) -> f64 {
        let t = (rho / self.a).powf(self.p());
        t + 1.0 / t
    }

    /// `G(r) = (π/α) ln(r/a) − ln 4`.
    pub fn g_log(&self, r: f64) -> f64 {
        (PI / self.alpha) * (r / self.a).ln() - 4f64.ln()
    }

    /// `x = (r/a)^{−p}`, the ray coordinate in `(0, 1]`.
    pub fn x_of_r(&self, r: f64) -> Result<f64> {
        if !(r >= self.a * (1.0 - SLACK)) {
            return Err(Error::OutsideDomain);
        }
        Ok((r / self.a).powf(-self.p()))
    }

    /// Inverse of [`x_of_r`](Self::x_of_r): `r = a·x^{−2α/π}`.
    pub fn r_of_x(&self, x: f64) -> Result<f64> {
        if !(x > 0.0 && x <= 1.0 + SLACK) {
            return Err(Error::OutsideDomain);
        }
        Ok(self.a * x.powf(-1.0 / self.p()))
    }

    /// `κ = −(2α/π) k`.
    pub fn kappa_of_k(&self, k: Complex64) -> Complex64 {
        -k / self.p()
    }

    /// `k = −(π/2α) κ`.
    pub fn k_of_kappa(&self, kappa: Complex64) -> Complex64 {
        -kappa * self.p()
    }

    /// `u = e^{iπθ/2α}` on the right unit semicircle.
    pub fn u_of_theta(&self, theta: f64) -> Result<Complex64> {
        if theta.abs() > self.alpha * (1.0 + SLACK) {
            return Err(Error::OutsideDomain);
        }
        Ok(Complex64::from_polar(1.0, self.p() * theta))
    }

    /// Inverse of [`u_of_theta`](Self::u_of_theta).
    pub fn theta_of_u(&self, u: Complex64) -> Result<f64> {
        if (u.norm() - 1.0).abs() > 1e-12 || u.re < -1e-12 {
            return Err(Error::OutsideDomain);
        }
        Ok(u.arg() / self.p())
    }

    /// Apply every forward map for which an input is supplied.
    pub fn change_vars(&self, input: &ChangeVarsInput) -> Result<ChangeVars> {
        Ok(ChangeVars {
            x: input.r.map(|r| self.x_of_r(r)).transpose()?,
            y: input.rho.map(|r| self.x_of_r(r)).transpose()?,
            kappa: input.k.map(|k| self.kappa_of_k(k)),
            u: input.theta.map(|t| self.u_of_theta(t)).transpose()?,
            v: input.phi.map(|t| self.u_of_theta(t)).transpose()?,
        })
    }

    /// Apply every inverse map for which a value is supplied.
    pub fn change_vars_inverse(&self, cv: &ChangeVars) -> Result<ChangeVarsInput> {
        Ok(ChangeVarsInput {
            r: cv.x.map(|x| self.r_of_x(x)).transpose()?,
            rho: cv.y.map(|y| self.r_of_x(y)).transpose()?,
            k: cv.kappa.map(|k| self.k_of_kappa(k)),
            theta: cv.u.map(|u| self.theta_of_u(u)).transpose()?,
            phi: cv.v.map(|v| self.theta_of_u(v)).transpose()?,
        })
    }
}

/// Inputs for [`HankelDomain::change_vars`]; any subset may be given.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct ChangeVarsInput {
    pub r: Option<f64>,
    pub rho: Option<f64>,
    pub k: Option<Complex64>,
    pub theta: Option<f64>,
    pub phi: Option<f64>,
}

/// The κ-coordinates: `x` from `r`, `y` from `ρ`, `κ` from `k`, `u` from
/// `θ`, `v` from `φ`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct ChangeVars {
    pub x: Option<f64>,
    pub y: Option<f64>,
    pub kappa: Option<Complex64>,
    pub u: Option<Complex64>,
    pub v: Option<Complex64>,
}
