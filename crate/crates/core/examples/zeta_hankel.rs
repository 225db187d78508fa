//! The Hankel moment S(s) of 1/(e^{-z} - 1) against -2πi ζ(s)/Γ(1-s).

use std::f64::consts::PI;

use hankel_laplace::solver::{hankel_moment_closed, hankel_moment_riemann};
use hankel_laplace::specfun::zeta;
use hankel_laplace::{Complex64, HankelDomain, QuadratureSpec};

fn main() -> hankel_laplace::Result<()> {
    let d = HankelDomain::new(1.0, 3.0 * PI / 4.0)?;
    let sp = QuadratureSpec::default();
    for s in [-3.0, -1.0, 0.5, 2.0, 3.5] {
        let num = hankel_moment_riemann(&d, Complex64::new(s, 0.0), &sp)?;
        let closed = hankel_moment_closed(s)?;
        println!(
            "s = {s:+.1}  ζ(s) = {:+.12}  S = {:+.12}{:+.12}i  |S − closed| = {:.2e}",
            zeta(s)?,
            num.re,
            num.im,
            (num - closed).norm()
        );
    }
    Ok(())
}
