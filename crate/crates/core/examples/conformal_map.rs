//! The map of the Hankel exterior onto the upper half-plane.

use std::f64::consts::PI;

use hankel_laplace::{Complex64, HankelDomain};

fn main() -> hankel_laplace::Result<()> {
    let d = HankelDomain::new(1.0, 3.0 * PI / 4.0)?;
    println!("a = {}, alpha = {:.6}, p = {:.6}", d.a(), d.alpha(), d.p());

    for (label, z) in [
        ("corner +", Complex64::from_polar(d.a(), d.alpha())),
        ("arc midpoint", Complex64::new(d.a(), 0.0)),
        ("corner -", Complex64::from_polar(d.a(), -d.alpha())),
    ] {
        let w = d.conformal_map(z)?;
        println!("{label:>12}: ω = {:+.12} {:+.12}i", w.re, w.im);
    }

    // interior points land in the upper half-plane
    for (r, th) in [(2.0, 0.0), (5.0, 1.5), (1.5, -2.0)] {
        let m = d.map_xy(r, th)?;
        println!("(r, θ) = ({r}, {th:+}) -> (x, y) = ({:+.6}, {:.6})", m.x, m.y);
    }
    Ok(())
}
