//! Solve the Neumann problem for the data of q = Re z^k and compare with the
//! exact solution.

use std::f64::consts::PI;

use hankel_laplace::solver::{power_exact, power_solution_data, solve_grid, Part};
use hankel_laplace::{Complex64, HankelDomain, QuadratureSpec};

fn main() -> hankel_laplace::Result<()> {
    let d = HankelDomain::new(1.0, 3.0 * PI / 4.0)?;
    let k = Complex64::new(-1.5, 0.0);
    let data = power_solution_data(&d, k, Part::Re)?;
    let pts: Vec<(f64, f64)> = [1.1, 2.0, 4.0, 8.0]
        .iter()
        .flat_map(|&r| [-2.0, -0.5, 0.0, 1.0, 2.3].map(|t| (r, t)))
        .collect();
    let mut worst: f64 = 0.0;
    for f in solve_grid(&d, &data, &pts, &QuadratureSpec::default())? {
        let e = power_exact(k, Part::Re, f.r, f.theta);
        worst = worst.max((f.q - e).abs());
        println!("r = {:4.1}  θ = {:+.2}  q = {:+.12}  exact = {:+.12}", f.r, f.theta, f.q, e);
    }
    println!("max error {worst:.2e}");
    Ok(())
}
