//! Mellin–Barnes evaluation of
//! `G²¹₃₃(x | a₁ a₂ a₃ ; b₁ b₂ b₃)
//!   = (1/2πi) ∫ Γ(b₁−s)Γ(b₂−s)Γ(1−a₁+s) / (Γ(1−b₃+s)Γ(a₂−s)Γ(a₃−s)) xˢ ds`.
//!
//! For the rows used here the integrand is balanced: on a vertical line it
//! decays only like `|s|^{Σb−Σa}` and the integral converges conditionally.
//! The contour is therefore a wedge through a point `c` between the two pole
//! families, with both arms tilted by `φ` away from the vertical towards the
//! half-plane where `|xˢ|` decays (right for `x < 1`, left for `x > 1`).
//! Closing the wedge against a vertical line encloses no poles, and on the
//! arms the integrand decays like `exp(−t·sin φ·|ln x|)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::{ln_gamma, recip_gamma};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_breakpoints, QuadratureSpec};

/// Contour parameters for [`meijer_g2133_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MbContour {
    /// Where the contour meets the real axis, as a fraction of the gap
    /// between the left and right pole families (0.5 = midpoint).
    pub gap_fraction: f64,
    /// Tilt of the arms away from the vertical, in radians.
    pub tilt: f64,
}

impl Default for MbContour {
    fn default() -> Self {
        MbContour {
            gap_fraction: 0.5,
            tilt: PI / 4.0,
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn is_pole(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `G²¹₃₃(x | a_row ; b_row)` on the default contour.
pub fn meijer_g2133(x: f64, a_row: [f64; 3], b_row: [f64; 3]) -> Result<Complex64> {
    meijer_g2133_with(x, a_row, b_row, MbContour::default())
}

/// `G²¹₃₃` on an explicit wedge contour.
pub fn meijer_g2133_with(
    x: f64,
    a_row: [f64; 3],
    b_row: [f64; 3],
    contour: MbContour,
) -> Result<Complex64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::ParameterOutOfRange(format!("x = {x} must be positive")));
    }
    if !(contour.gap_fraction > 0.0 && contour.gap_fraction < 1.0)
        || !(contour.tilt > 0.0 && contour.tilt < PI / 2.0)
    {
        return Err(Error::ParameterOutOfRange("contour parameters".into()));
    }
    let [a1, a2, a3] = a_row;
    let [b1, b2, b3] = b_row;
    let left_max = a1 - 1.0;
    let right_min = b1.min(b2);
    if left_max >= right_min {
        return Err(Error::ContourPinch);
    }
    let lx = x.ln();
    if lx.abs() < 1e-3 {
        // |xˢ| does not decay along any direction; the balanced integral
        // would only converge conditionally.
        return Err(Error::NonConvergence {
            achieved: f64::INFINITY,
            requested: 0.0,
        });
    }
    let c0 = left_max + contour.gap_fraction * (right_min - left_max);
    let integrand = |s: Complex64| -> Complex64 {
        let ra2 = recip_gamma(c(a2, 0.0) - s);
        let ra3 = recip_gamma(c(a3, 0.0) - s);
        let rb3 = recip_gamma(c(1.0 - b3, 0.0) + s);
        if ra2 == c(0.0, 0.0) || ra3 == c(0.0, 0.0) || rb3 == c(0.0, 0.0) {
            return c(0.0, 0.0);
        }
        let num = [c(b1, 0.0) - s, c(b2, 0.0) - s, c(1.0 - a1, 0.0) + s];
        if num.iter().any(|z| is_pole(*z)) {
            return c(f64::NAN, f64::NAN);
        }
        let mut lg = s * lx;
        for z in num {
            lg += ln_gamma(z).unwrap_or(c(f64::NAN, 0.0));
        }
        for z in [c(a2, 0.0) - s, c(a3, 0.0) - s, c(1.0 - b3, 0.0) + s] {
            lg -= ln_gamma(z).unwrap_or(c(f64::NAN, 0.0));
        }
        lg.exp()
    };
    // Arm directions: up-arm angle from the positive real axis.
    let theta_up = if lx < 0.0 {
        PI / 2.0 - contour.tilt
    } else {
        PI / 2.0 + contour.tilt
    };
    let dir_up = c(theta_up.cos(), theta_up.sin());
    let dir_dn = dir_up.conj();
    let decay = contour.tilt.sin() * lx.abs();
    let t_max = 45.0 / decay;
    let mut breaks = vec![0.0];
    let mut t = 0.5;
    while t < t_max {
        breaks.push(t);
        t *= 2.0;
    }
    breaks.push(t_max);
    let spec = QuadratureSpec {
        rel_tol: 1e-12,
        abs_tol: 1e-16,
        max_subdivisions: 20_000,
        base_rule_order: 12,
        ..Default::default()
    };
    let f = |t: f64| -> Complex64 {
        let up = integrand(c(c0, 0.0) + dir_up * t) * dir_up;
        let dn = integrand(c(c0, 0.0) + dir_dn * t) * dir_dn;
        up - dn
    };
    let val: Complex64 = integrate_breakpoints(f, &breaks, &spec)?;
    if !(val.re.is_finite() && val.im.is_finite()) {
        return Err(Error::NonConvergence {
            achieved: f64::INFINITY,
            requested: spec.rel_tol,
        });
    }
    Ok(val / c(0.0, 2.0 * PI))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k0_row_matches_closed_form() {
        let b = PI / 4.0;
        let x = b.cos().powi(2);
        let expected = 2.0 / PI.powf(1.5) * b.cos() / b.tan() * (b.cos() / (1.0 + b.sin())).ln();
        let g = meijer_g2133(x, [1.0, 0.5, 1.5], [1.0, 1.0, 0.5]).unwrap();
        assert!((g.re - expected).abs() < 1e-10, "{g} vs {expected}");
        assert!(g.im.abs() < 1e-12);
    }

    #[test]
    fn shifted_contour_oracle() {
        // mpmath: meijerg([[1],[-1/4,9/4]],[[1,1],[1/2]],0.9) = -1.302183761460715464
        let a = [1.0, -0.25, 2.25];
        let b = [1.0, 1.0, 0.5];
        let g1 = meijer_g2133(0.9, a, b).unwrap();
        let g2 = meijer_g2133_with(
            0.9,
            a,
            b,
            MbContour {
                gap_fraction: 0.3,
                tilt: PI / 3.0,
            },
        )
        .unwrap();
        assert!((g1 - g2).norm() < 1e-9, "{g1} {g2}");
        assert!((g1.re + 1.302_183_761_460_715_5).abs() < 1e-9, "{g1}");
    }

    #[test]
    fn pinch_and_unit_argument() {
        assert_eq!(
            meijer_g2133(0.5, [3.0, 0.5, 1.5], [1.0, 1.0, 0.5]).unwrap_err(),
            Error::ContourPinch
        );
        assert!(matches!(
            meijer_g2133(1.0, [1.0, 0.5, 1.5], [1.0, 1.0, 0.5]),
            Err(Error::NonConvergence { .. })
        ));
    }
}
