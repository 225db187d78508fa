//! The family `₂F₁(1, b; b+1; z) = b Σ zⁿ/(b+n)`.
//!
//! The evaluation picks whichever expansion converges fastest at `z`:
//! the defining series, the Pfaff transform in `z/(z−1)`, the logarithmic
//! expansion about `z = 1`, or the inversion formula in `1/z`. Points where
//! none of these converges quickly (near `e^{±iπ/3}`) fall back on the Euler
//! integral `b∫₀¹ t^{b−1}/(1−zt) dt` after raising `b` with the contiguous
//! relation.
//!
//! On the cut `z ∈ (1, ∞)` the value returned is the limit from below,
//! `ln(1−z) = ln(z−1) + iπ`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::digamma;
use super::{BranchNote, HypergeomValue};
use crate::error::{Error, Result};
use crate::quadrature::{integrate_adaptive_estimate, QuadratureSpec};

const MAX_TERMS: usize = 1_000_000;
const RATE_LIMIT: f64 = 0.75;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn on_cut(z: Complex64) -> bool {
    z.im == 0.0 && z.re > 1.0
}

/// `ln(1 − z)` with the lower-side value on the cut.
fn ln_one_minus(z: Complex64) -> Complex64 {
    if on_cut(z) {
        c((z.re - 1.0).ln(), PI)
    } else {
        (c(1.0, 0.0) - z).ln()
    }
}

/// `Log(−z)` with the lower-side value on the positive real axis.
fn ln_minus(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re > 0.0 {
        c(z.re.ln(), PI)
    } else {
        (-z).ln()
    }
}

fn check_b(b: Complex64) -> Result<()> {
    if b.im == 0.0 && b.re <= 0.0 && b.re == b.re.round() {
        return Err(Error::ParameterPole(format!(
            "2F1(1,b;b+1;z) undefined for b = {}",
            b.re
        )));
    }
    if !(b.re.is_finite() && b.im.is_finite()) {
        return Err(Error::ParameterPole("non-finite parameter".into()));
    }
    Ok(())
}

struct Sum {
    value: Complex64,
    err: f64,
}

/// Sums terms produced by `next(n, prev)` until two successive partial sums
/// agree to 1e-16 relative (checked over a few consecutive terms).
fn sum_series<F: FnMut(usize, Complex64) -> Complex64>(first: Complex64, mut next: F) -> Result<Sum> {
    let mut term = first;
    let mut acc = first;
    let mut abs_acc = first.norm();
    let mut small = 0;
    for n in 1..MAX_TERMS {
        term = next(n, term);
        acc += term;
        abs_acc += term.norm();
        if term.norm() <= 1e-17 * acc.norm().max(1e-300) {
            small += 1;
            if small >= 3 {
                return Ok(Sum {
                    value: acc,
                    err: term.norm() + 4.0 * f64::EPSILON * abs_acc,
                });
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        achieved: term.norm(),
        requested: 1e-16,
    })
}

fn direct_series(b: Complex64, z: Complex64) -> Result<Sum> {
    // terms b z^n/(b+n), built from z^n
    let mut zn = c(1.0, 0.0);
    let mut acc = c(1.0, 0.0);
    let mut abs_acc = 1.0;
    let mut small = 0;
    for n in 1..MAX_TERMS {
        zn *= z;
        let t = zn * b / (b + n as f64);
        acc += t;
        abs_acc += t.norm();
        if t.norm() <= 1e-17 * acc.norm().max(1e-300) {
            small += 1;
            if small >= 3 {
                return Ok(Sum {
                    value: acc,
                    err: t.norm() + 4.0 * f64::EPSILON * abs_acc,
                });
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        achieved: f64::NAN,
        requested: 1e-16,
    })
}

/// Pfaff: F = (1−z)^{-1} Σ n!/(b+1)_n wⁿ with w = z/(z−1).
fn pfaff(b: Complex64, z: Complex64) -> Result<Sum> {
    let one = c(1.0, 0.0);
    let w = z / (z - one);
    let s = sum_series(one, |n, prev| prev * (n as f64) / (b + n as f64) * w)?;
    let pre = (one - z).inv();
    Ok(Sum {
        value: s.value * pre,
        err: s.err * pre.norm(),
    })
}

/// Expansion about z = 1 (the degenerate case c − a − b = 0):
/// F = b Σ (b)_n/n! [ψ(n+1) − ψ(b+n) − ln(1−z)] (1−z)ⁿ.
fn near_one(b: Complex64, z: Complex64) -> Result<Sum> {
    let one = c(1.0, 0.0);
    let w = one - z;
    let lg = ln_one_minus(z);
    let mut psi_n1 = digamma(one)?; // ψ(1)
    let mut psi_bn = digamma(b)?; // ψ(b)
    let mut coef = one; // (b)_n / n! · w^n
    let mut acc = coef * (psi_n1 - psi_bn - lg);
    let mut abs_acc = acc.norm();
    let mut small = 0;
    for n in 1..MAX_TERMS {
        let nf = n as f64;
        coef = coef * (b + (nf - 1.0)) / nf * w;
        psi_n1 += 1.0 / nf;
        psi_bn += (b + (nf - 1.0)).inv();
        let t = coef * (psi_n1 - psi_bn - lg);
        acc += t;
        abs_acc += t.norm();
        if t.norm() <= 1e-17 * acc.norm().max(1e-300) && coef.norm() <= 1e-17 * acc.norm().max(1e-300) {
            small += 1;
            if small >= 3 {
                return Ok(Sum {
                    value: acc * b,
                    err: (t.norm() + 8.0 * f64::EPSILON * abs_acc) * b.norm(),
                });
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        achieved: f64::NAN,
        requested: 1e-16,
    })
}

/// Inversion about infinity:
/// F = (b/z) Σ_j z^{−j}/(j+1−b) + πb/sin(πb)·(−z)^{−b},
/// with the two singular pieces combined when b is close to a positive integer.
fn inversion(b: Complex64, z: Complex64) -> Result<Sum> {
    let one = c(1.0, 0.0);
    let iz = z.inv();
    let l = ln_minus(z);
    let n0 = b.re.round();
    let eps = b - n0;
    let near_int = n0 >= 1.0 && eps.norm() < 0.05;
    let skip = if near_int { Some((n0 as usize) - 1) } else { None };
    let mut acc = c(0.0, 0.0);
    let mut abs_acc = 0.0;
    let mut zj = one;
    let mut small = 0;
    let mut last = 0.0;
    let mut converged = false;
    for j in 0..MAX_TERMS {
        if Some(j) != skip {
            let t = zj / (one * (j as f64 + 1.0) - b);
            acc += t;
            abs_acc += t.norm();
            last = t.norm();
            if j > 2 && last <= 1e-17 * acc.norm().max(1e-300) {
                small += 1;
                if small >= 3 {
                    converged = true;
                    break;
                }
            } else {
                small = 0;
            }
        }
        zj *= iz;
    }
    if !converged {
        return Err(Error::NonConvergence {
            achieved: last,
            requested: 1e-16,
        });
    }
    let first = acc * b * iz;
    let second = if near_int {
        // b z^{−n0} [ (e^{−εL} − 1)/ε + e^{−εL}(π/sin πε − 1/ε) ]
        let x = -eps * l;
        let expm1_over_eps = if x.norm() < 0.1 {
            // (e^x − 1)/ε = −L Σ x^{m−1}/m!
            let mut term = one;
            let mut s = one;
            for m in 2..30 {
                term = term * x / (m as f64);
                s += term;
                if term.norm() < 1e-18 {
                    break;
                }
            }
            -l * s
        } else {
            (x.exp() - one) / eps
        };
        let pe = eps * PI;
        let sin_part = if pe.norm() < 0.2 {
            // (1/ε)(x/sin x − 1), x = πε
            let x2 = pe * pe;
            let series = x2 / 6.0
                + x2 * x2 * (7.0 / 360.0)
                + x2 * x2 * x2 * (31.0 / 15120.0)
                + x2 * x2 * x2 * x2 * (127.0 / 604_800.0)
                + x2 * x2 * x2 * x2 * x2 * (73.0 / 3_421_440.0);
            if eps.norm() == 0.0 {
                c(0.0, 0.0)
            } else {
                series / eps
            }
        } else {
            one * PI / pe.sin() - eps.inv()
        };
        let zn0 = iz.powi(n0 as i32);
        b * zn0 * (expm1_over_eps + x.exp() * sin_part)
    } else {
        b * PI / (b * PI).sin() * (-b * l).exp()
    };
    Ok(Sum {
        value: first + second,
        err: (last + 8.0 * f64::EPSILON * abs_acc) * (b * iz).norm() + 1e-16 * second.norm(),
    })
}

/// Euler integral F_b(z) = b ∫₀¹ t^{b−1}/(1 − z t) dt for Re b ≥ 1, reached
/// from smaller Re b by F_b = 1 + (b z/(b+1)) F_{b+1}.
fn euler_integral(b: Complex64, z: Complex64) -> Result<Sum> {
    let one = c(1.0, 0.0);
    let mut lift = 0usize;
    while b.re + (lift as f64) < 2.0 {
        lift += 1;
    }
    let bt = b + lift as f64;
    let spec = QuadratureSpec {
        rel_tol: 1e-14,
        abs_tol: 1e-300,
        max_subdivisions: 20_000,
        base_rule_order: 12,
        ..Default::default()
    };
    let est = integrate_adaptive_estimate(
        |t: f64| {
            if t <= 0.0 {
                return c(0.0, 0.0);
            }
            ((bt - 1.0) * t.ln()).exp() / (one - z * t)
        },
        0.0,
        1.0,
        &spec,
    )?;
    let mut val = est.value * bt;
    let mut err = est.error * bt.norm();
    for j in (0..lift).rev() {
        let bj = b + j as f64;
        let factor = bj * z / (bj + 1.0);
        val = one + factor * val;
        err *= factor.norm();
    }
    Ok(Sum { value: val, err })
}

/// `₂F₁(1, b; b+1; z)`.
pub fn hyp2f1_1b(b: Complex64, z: Complex64) -> Result<HypergeomValue> {
    check_b(b)?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::BranchCut);
    }
    // Normalise a signed-zero imaginary part so the cut test is unambiguous.
    let z = if z.im == 0.0 { c(z.re, 0.0) } else { z };
    if z.re == 1.0 && z.im == 0.0 {
        return Err(Error::BranchCut);
    }
    let branch_note = if on_cut(z) {
        BranchNote::ContinuedBelow
    } else {
        BranchNote::Principal
    };
    if z.norm() == 0.0 {
        return Ok(HypergeomValue {
            value: c(1.0, 0.0),
            branch_note,
            est_error: 0.0,
        });
    }
    let one = c(1.0, 0.0);
    let r_direct = z.norm();
    let r_pfaff = if on_cut(z) {
        f64::INFINITY
    } else {
        (z / (z - one)).norm()
    };
    let r_one = (one - z).norm();
    let r_inv = 1.0 / z.norm();
    let rates = [r_direct, r_pfaff, r_one, r_inv];
    let (best, rate) = rates
        .iter()
        .enumerate()
        .fold((0usize, f64::INFINITY), |acc, (i, &r)| if r < acc.1 { (i, r) } else { acc });
    let sum = if rate > RATE_LIMIT {
        euler_integral(b, z)?
    } else {
        match best {
            0 => direct_series(b, z)?,
            1 => pfaff(b, z)?,
            2 => near_one(b, z)?,
            _ => inversion(b, z)?,
        }
    };
    Ok(HypergeomValue {
        value: sum.value,
        branch_note,
        est_error: sum.err,
    })
}

/// `F̃(κ; u) = ₂F₁(1, κ+1; κ+2; u)/(κ+1)`.
pub fn f_tilde(kappa: Complex64, u0: Complex64) -> Result<HypergeomValue> {
    let b = kappa + 1.0;
    let h = hyp2f1_1b(b, u0)?;
    Ok(HypergeomValue {
        value: h.value / b,
        branch_note: h.branch_note,
        est_error: h.est_error / b.norm(),
    })
}

/// Lerch transcendent `Φ(z, 1, p) = Σ zⁿ/(n+p)` for `z ∉ [1, ∞)`.
pub fn lerch_phi(z: Complex64, p: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re >= 1.0 {
        return Err(Error::BranchCut);
    }
    let h = hyp2f1_1b(p, z)?;
    Ok(h.value / p)
}
