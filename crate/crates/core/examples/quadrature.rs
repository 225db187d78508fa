//! Adaptive, log-singular, principal-value and semi-infinite integrals.

use hankel_laplace::quadrature::{
    integrate_adaptive, integrate_log_singular, integrate_pv, integrate_ray, QuadratureSpec,
};

fn main() -> hankel_laplace::Result<()> {
    let sp = QuadratureSpec::default();

    let smooth: f64 = integrate_adaptive(|x: f64| x.exp(), 0.0, 1.0, &sp)?;
    println!("∫₀¹ eˣ dx          = {smooth:.15}  (e − 1 = {:.15})", std::f64::consts::E - 1.0);

    let log: f64 = integrate_log_singular(|x: f64| x, 0.0, 0.0, 1.0, &sp)?;
    println!("∫₀¹ x ln x dx      = {log:.15}  (−1/4)");

    // x²/(x − 1) = x + 1 + 1/(x − 1)
    let pv: f64 = integrate_pv(|x: f64| x * x, 1.0, 0.0, 3.0, &sp)?;
    println!("PV ∫₀³ x²/(x−1) dx = {pv:.15}  (closed form {:.15})", 7.5 + 2f64.ln());

    // the ray measure is dr/r
    let tail: f64 = integrate_ray(|r: f64| (-r).exp(), 1.0, -4.0, &sp)?;
    println!("∫₁^∞ e^(−r)/r dr   = {tail:.15}  (E₁(1) = 0.219383934395520)");
    Ok(())
}
