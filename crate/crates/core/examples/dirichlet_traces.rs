//! Dirichlet boundary values recovered from Neumann data.

use std::f64::consts::PI;

use hankel_laplace::solver::{
    dirichlet_arc, dirichlet_diff, dirichlet_ray, dirichlet_sum, power_exact, power_solution_data, ArcKernel,
    Part,
};
use hankel_laplace::{Complex64, HankelDomain, QuadratureSpec};

fn main() -> hankel_laplace::Result<()> {
    let d = HankelDomain::new(1.0, 3.0 * PI / 4.0)?;
    let sp = QuadratureSpec::default();
    let k = Complex64::new(-1.0, 0.0);
    let al = d.alpha();

    for part in [Part::Re, Part::Im] {
        let data = power_solution_data(&d, k, part)?;
        println!("{part:?} z^-1");
        for th in [-1.5, 0.4] {
            let v = dirichlet_arc(&d, &data, th, ArcKernel::Printed, &sp)?;
            println!("  q(a, {th:+})  = {v:+.12}  exact {:+.12}", power_exact(k, part, d.a(), th));
        }
        let r = 3.0;
        let plus = dirichlet_ray(&d, &data, r, 1.0, &sp)?;
        let minus = dirichlet_ray(&d, &data, r, -1.0, &sp)?;
        println!("  q(3, +α)    = {plus:+.12}  exact {:+.12}", power_exact(k, part, r, al));
        println!("  q(3, −α)    = {minus:+.12}  exact {:+.12}", power_exact(k, part, r, -al));
        println!("  diff        = {:+.12}", dirichlet_diff(&d, &data, r, &sp)?);
        // the sum form needs S = 0, which holds for both parts here
        println!("  sum         = {:+.12}", dirichlet_sum(&d, &data, r, &sp)?);
    }
    Ok(())
}
