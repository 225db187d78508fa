//! `₃F₂(½, 1, 1; b₁, b₂; x)` for real `x ≤ 0`.
//!
//! Inside the unit disc the defining series is used. Further out the Euler
//! integral over the third numerator parameter reduces it to
//! `₂F₁(½, 1; b₁; x t)`, which is itself brought to a convergent region by a
//! Pfaff transform and, for large negative arguments, the `1 − w` connection
//! formula.

use num_complex::Complex64;

use super::gamma::{gamma_real, recip_gamma_real};
use super::{BranchNote, HypergeomValue};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_singular_estimate, QuadratureSpec};

const MAX_TERMS: usize = 1_000_000;

fn nonpositive_integer(b: f64) -> bool {
    b <= 0.0 && b == b.round()
}

fn check(b1: f64, b2: f64, x: f64) -> Result<()> {
    if nonpositive_integer(b1) || nonpositive_integer(b2) {
        return Err(Error::ParameterPole(format!(
            "3F2 lower parameter at a nonpositive integer ({b1}, {b2})"
        )));
    }
    if !(x <= 0.0) || !x.is_finite() || !b1.is_finite() || !b2.is_finite() {
        return Err(Error::ParameterOutOfRange(format!("x = {x} must be finite and ≤ 0")));
    }
    Ok(())
}

/// Generic real hypergeometric series `Σ Π(a)_n/Π(b)_n xⁿ/n!` with the ratio
/// supplied as a closure.
fn real_series<F: Fn(f64) -> f64>(x: f64, ratio: F) -> Result<(f64, f64)> {
    let mut term = 1.0;
    let mut acc = 1.0;
    let mut abs_acc = 1.0;
    let mut small = 0;
    for n in 0..MAX_TERMS {
        term *= ratio(n as f64) * x;
        acc += term;
        abs_acc += term.abs();
        if term.abs() <= 1e-17 * acc.abs().max(1e-300) {
            small += 1;
            if small >= 3 {
                return Ok((acc, term.abs() + 4.0 * f64::EPSILON * abs_acc));
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        achieved: term.abs(),
        requested: 1e-16,
    })
}

/// `₃F₂(½,1,1;b₁,b₂;x)` by its defining series (requires `|x| < 1`).
pub fn hyp3f2_half11_series(b1: f64, b2: f64, x: f64) -> Result<HypergeomValue> {
    check(b1, b2, x)?;
    if x.abs() >= 1.0 {
        return Err(Error::ParameterOutOfRange("series needs |x| < 1".into()));
    }
    // (½)_n (1)_n (1)_n / ((b1)_n (b2)_n n!) → ratio (n+½)(n+1)/((b1+n)(b2+n))
    let (v, e) = real_series(x, |n| (n + 0.5) * (n + 1.0) / ((b1 + n) * (b2 + n)))?;
    Ok(real_value(v, e))
}

fn real_value(v: f64, e: f64) -> HypergeomValue {
    HypergeomValue {
        value: Complex64::new(v, 0.0),
        branch_note: BranchNote::Principal,
        est_error: e,
    }
}

/// Real `₂F₁(½, 1; c; z)` for `z ≤ 0`.
pub fn hyp2f1_half1(c: f64, z: f64) -> Result<f64> {
    if nonpositive_integer(c) {
        return Err(Error::ParameterPole(format!("2F1 lower parameter {c}")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z >= -0.5 {
        let (v, _) = real_series(z, |n| (n + 0.5) / (c + n))?;
        return Ok(v);
    }
    // Pfaff on the unit numerator: (1−z)^{-1} ₂F₁(1, c−½; c; w), w = z/(z−1)
    let w = z / (z - 1.0);
    let pre = 1.0 / (1.0 - z);
    if w <= 0.75 {
        let (v, _) = real_series(w, |n| (c - 0.5 + n) / (c + n))?;
        return Ok(pre * v);
    }
    // Connection about w = 1 with c − a − b = −½:
    // ₂F₁(1, c−½; c; w) = −2(c−1) ₂F₁(1, c−½; 3/2; 1−w)
    //                     + √π Γ(c)/Γ(c−½) (1−w)^{−½} w^{1−c}
    let s = 1.0 - w;
    let (f1, _) = real_series(s, |n| (1.0 + n) * (c - 0.5 + n) / ((1.5 + n) * (1.0 + n)))?;
    let g = gamma_real(c)? * recip_gamma_real(c - 0.5);
    let v = -2.0 * (c - 1.0) * f1 + std::f64::consts::PI.sqrt() * g * s.powf(-0.5) * w.powf(1.0 - c);
    Ok(pre * v)
}

/// `₃F₂(½,1,1;b₁,b₂;x)` by the Euler integral
/// `(β−1)∫₀¹ (1−t)^{β−2} ₂F₁(½,1;b;x t) dt`, where `β = max(b₁,b₂) > 1`
/// and `b` is the other parameter.
pub fn hyp3f2_half11_integral(b1: f64, b2: f64, x: f64) -> Result<HypergeomValue> {
    check(b1, b2, x)?;
    let (inner_c, beta) = if b2 >= b1 { (b1, b2) } else { (b2, b1) };
    if x == 0.0 {
        return Ok(real_value(1.0, 0.0));
    }
    if beta == 1.0 {
        return Ok(real_value(hyp2f1_half1(inner_c, x)?, 1e-15));
    }
    if beta < 1.0 {
        return Err(Error::ParameterOutOfRange(
            "integral representation needs max(b1, b2) ≥ 1".into(),
        ));
    }
    let spec = QuadratureSpec {
        rel_tol: 1e-13,
        abs_tol: 1e-300,
        max_subdivisions: 20_000,
        base_rule_order: 10,
        ..Default::default()
    };
    // The inner function varies on the scale t ~ 1/|x|; seed a breakpoint.
    let knee = (1.0 / x.abs()).min(0.5);
    let est = if beta >= 2.0 {
        let f = |t: f64| (beta - 1.0) * (1.0 - t).powf(beta - 2.0) * hyp2f1_half1(inner_c, x * t).unwrap_or(f64::NAN);
        integrate_singular_estimate(f, 0.0, 1.0, &[0.0, knee], &spec)?
    } else {
        // u = (1−t)^{β−1} removes the endpoint singularity at t = 1.
        let e = 1.0 / (beta - 1.0);
        let f = |u: f64| hyp2f1_half1(inner_c, x * (1.0 - u.powf(e))).unwrap_or(f64::NAN);
        let u_knee = (1.0 - knee).powf(beta - 1.0);
        integrate_singular_estimate(f, 0.0, 1.0, &[u_knee, 1.0], &spec)?
    };
    if !est.value.is_finite() {
        return Err(Error::NonConvergence {
            achieved: f64::INFINITY,
            requested: spec.rel_tol,
        });
    }
    Ok(real_value(est.value, est.error))
}

/// `₃F₂(½,1,1;b₁,b₂;x)` for `x ≤ 0`: series for `|x| ≤ 0.9`, Euler
/// integral beyond.
pub fn hyp3f2_half11(b1: f64, b2: f64, x: f64) -> Result<HypergeomValue> {
    check(b1, b2, x)?;
    if x.abs() <= 0.9 {
        hyp3f2_half11_series(b1, b2, x)
    } else {
        hyp3f2_half11_integral(b1, b2, x)
    }
}
