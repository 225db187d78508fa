//! Boundary moments and the large-r behaviour of the solution.

use std::f64::consts::PI;

use hankel_laplace::solver::{asymptotic_from_moments, moment_s, moment_s_tilde, solve, NeumannData};
use hankel_laplace::{HankelDomain, QuadratureSpec};

fn main() -> hankel_laplace::Result<()> {
    let d = HankelDomain::new(1.0, 3.0 * PI / 4.0)?;
    let sp = QuadratureSpec::with_tol(1e-13, 1e-15);
    // odd arc flux: no net flux, so the logarithmic term is absent
    let data = NeumannData::custom(|_| 0.0, |_| 0.0, f64::sin, -1.0)?;
    let s = moment_s(&d, &data, &sp)?;
    let st = moment_s_tilde(&d, &data, &sp)?;
    println!("S = {s:.3e}, S~ = {st:.12}");
    let theta = 0.6;
    for r in [10.0, 31.6, 100.0, 316.0, 1000.0] {
        let q = solve(&d, &data, r, theta, &sp)?;
        let asy = asymptotic_from_moments(&d, s, st, r, theta);
        println!("r = {r:7.1}  q = {q:+.6e}  asymptotic = {asy:+.6e}  |diff| = {:.3e}", (q - asy).abs());
    }
    println!("leading decay exponent -π/2α = {:.4}", -d.p());
    Ok(())
}
