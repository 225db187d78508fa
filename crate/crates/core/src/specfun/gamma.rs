use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `ln sin(πz)` computed without overflow for large `|Im z|`
/// (equal to the principal log of `sin(πz)` modulo `2πi`).
pub(crate) fn ln_sin_pi(z: Complex64) -> Complex64 {
    if z.im.abs() < 1.0 {
        return (z * PI).sin().ln();
    }
    if z.im > 0.0 {
        // sin(πz) = (i/2)·e^{−iπz}·(1 − e^{2iπz})
        let e = (c(0.0, 2.0 * PI) * z).exp();
        c(0.0, -PI) * z + c(-(2f64.ln()), PI / 2.0) + (c(1.0, 0.0) - e).ln()
    } else {
        ln_sin_pi(z.conj()).conj()
    }
}

/// Complex log-gamma by the Lanczos approximation with reflection for
/// `Re z < ½`. Agrees with `ln Γ(z)` modulo `2πi`.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::PoleAtNonpositiveInteger);
    }
    Ok(ln_gamma_unchecked(z))
}

fn ln_gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let one = c(1.0, 0.0);
        return c(PI.ln(), 0.0) - ln_sin_pi(z) - ln_gamma_unchecked(one - z);
    }
    let zm = z - 1.0;
    let mut acc = c(LANCZOS[0], 0.0);
    for (i, &coef) in LANCZOS.iter().enumerate().skip(1) {
        acc += coef / (zm + i as f64);
    }
    let t = zm + LANCZOS_G + 0.5;
    c(0.5 * (2.0 * PI).ln(), 0.0) + (zm + 0.5) * t.ln() - t + acc.ln()
}

/// Real log-gamma `ln|Γ(x)|` and the sign of `Γ(x)`.
pub fn ln_gamma_real(x: f64) -> Result<(f64, f64)> {
    if x <= 0.0 && x == x.round() {
        return Err(Error::PoleAtNonpositiveInteger);
    }
    let lg = ln_gamma_unchecked(c(x, 0.0)).re;
    let sign = if x > 0.0 || (x.floor() as i64).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    };
    Ok((lg, sign))
}

/// `Γ(z)`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    ln_gamma(z).map(|l| l.exp())
}

/// Real `Γ(x)`.
pub fn gamma_real(x: f64) -> Result<f64> {
    let (l, s) = ln_gamma_real(x)?;
    Ok(s * l.exp())
}

/// `1/Γ(z)`, zero at the poles of Γ.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        return c(0.0, 0.0);
    }
    (-ln_gamma_unchecked(z)).exp()
}

/// Real `1/Γ(x)`, zero at the poles of Γ.
pub fn recip_gamma_real(x: f64) -> f64 {
    match ln_gamma_real(x) {
        Ok((l, s)) => s * (-l).exp(),
        Err(_) => 0.0,
    }
}

/// Digamma `ψ(z)` by upward recurrence and the asymptotic series, with
/// reflection for `Re z < ½`.
pub fn digamma(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(Error::PoleAtNonpositiveInteger);
    }
    Ok(digamma_unchecked(z))
}

fn digamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let one = c(1.0, 0.0);
        let cot = (z * PI).cos() / (z * PI).sin();
        return digamma_unchecked(one - z) - cot * PI;
    }
    let mut acc = c(0.0, 0.0);
    let mut w = z;
    while w.norm() < 12.0 {
        acc -= w.inv();
        w += 1.0;
    }
    let w2 = (w * w).inv();
    // Bernoulli terms B_{2n}/(2n)
    let series = w2
        * (c(1.0 / 12.0, 0.0)
            - w2 * (c(1.0 / 120.0, 0.0)
                - w2 * (c(1.0 / 252.0, 0.0)
                    - w2 * (c(1.0 / 240.0, 0.0) - w2 * c(1.0 / 132.0, 0.0)))));
    acc + w.ln() - w.inv() * 0.5 - series
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        assert!(ln_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-14);
        assert!((ln_gamma(c(0.5, 0.0)).unwrap().re - PI.sqrt().ln()).abs() < 1e-14);
        assert!((ln_gamma(c(4.0, 0.0)).unwrap().re - 6f64.ln()).abs() < 1e-13);
        assert_eq!(
            ln_gamma(c(-2.0, 0.0)).unwrap_err(),
            Error::PoleAtNonpositiveInteger
        );
    }

    #[test]
    fn negative_real_sign() {
        // Γ(−1/2) = −2√π, Γ(−3/2) = 4√π/3
        assert!((gamma_real(-0.5).unwrap() + 2.0 * PI.sqrt()).abs() < 1e-13);
        assert!((gamma_real(-1.5).unwrap() - 4.0 * PI.sqrt() / 3.0).abs() < 1e-13);
        assert_eq!(recip_gamma_real(-3.0), 0.0);
    }

    #[test]
    fn large_imaginary_part() {
        // |Γ(1/2 + i t)|² = π / cosh(π t)
        let t = 60.0;
        let l = ln_gamma(c(0.5, t)).unwrap();
        let expected = 0.5 * (PI.ln() - (PI * t - 2f64.ln() + (1.0 + (-2.0 * PI * t).exp()).ln()));
        assert!((l.re - expected).abs() < 1e-11, "{} {}", l.re, expected);
        let l = ln_gamma(c(-40.5, -t)).unwrap();
        assert!(l.re.is_finite());
    }

    #[test]
    fn digamma_values() {
        let euler = 0.577_215_664_901_532_9;
        assert!((digamma(c(1.0, 0.0)).unwrap().re + euler).abs() < 1e-14);
        let half = -euler - 2.0 * 2f64.ln();
        assert!((digamma(c(0.5, 0.0)).unwrap().re - half).abs() < 1e-14);
        // ψ(−0.5) = ψ(0.5) + 2
        assert!((digamma(c(-0.5, 0.0)).unwrap().re - (half + 2.0)).abs() < 1e-13);
    }
}
