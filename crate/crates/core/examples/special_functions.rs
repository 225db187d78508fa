//! Gamma, ₂F₁(1,b;b+1;z), ₃F₂(½,1,1;b₁,b₂;x), ζ and G²¹₃₃.

use std::f64::consts::PI;

use hankel_laplace::specfun::{gamma, hyp2f1_1b, hyp3f2_half11, meijer_g2133, zeta};
use hankel_laplace::Complex64;

fn main() -> hankel_laplace::Result<()> {
    let c = |x: f64| Complex64::new(x, 0.0);
    println!("Γ(1/2)          = {:.15}  (√π = {:.15})", gamma(c(0.5))?.re, PI.sqrt());
    println!("Γ(1+i)          = {:.15}", gamma(Complex64::new(1.0, 1.0))?);

    let v = hyp2f1_1b(c(1.0), c(2.0))?;
    println!("₂F₁(1,1;2;2)    = {:.15} ({:?})", v.value, v.branch_note);
    println!("₂F₁(1,3;4;−1)   = {:.15}", hyp2f1_1b(c(3.0), c(-1.0))?.value.re);

    let x = hyp3f2_half11(-0.5, 2.5, -1.0)?;
    let want = 3.0 * (7.0 / 2f64.sqrt() * 1f64.asinh() - 4.0);
    println!("₃F₂(½,1,1;−½,5/2;−1) = {:.15}  (closed form {want:.15})", x.value.re);

    println!("ζ(1/2)          = {:.15}", zeta(0.5)?);
    println!("ζ(−1)           = {:.15}", zeta(-1.0)?);

    let g = meijer_g2133(0.9, [1.0, -0.25, 2.25], [1.0, 1.0, 0.5])?;
    println!("G(0.9 | 1, −1/4, 9/4; 1, 1, 1/2) = {:.12}", g.re);
    Ok(())
}
