//! Global-relation residuals and the functionals F1..F4.

use std::f64::consts::PI;

use hankel_laplace::globalrel::{f_j, f_of_k, gr_residual, DirichletTraces, Variant};
use hankel_laplace::solver::{power_solution_data, Part};
use hankel_laplace::{Complex64, HankelDomain, QuadratureSpec};

fn main() -> hankel_laplace::Result<()> {
    let d = HankelDomain::new(1.0, 3.0 * PI / 4.0)?;
    let sp = QuadratureSpec::default();
    let k0 = Complex64::new(-1.0, 0.0);
    let data = power_solution_data(&d, k0, Part::Re)?;
    let traces = DirichletTraces::power(&d, k0, Part::Re);
    for variant in [Variant::Plus, Variant::Minus, Variant::Sum, Variant::Diff] {
        let r = gr_residual(&d, &data, &traces, Complex64::new(-0.5, 0.0), variant, &sp)?;
        println!("{variant:?} at k = -1/2: |residual| = {:.2e}", r.norm());
    }

    let k = -0.25;
    println!("f({k}) = {:.12}", f_of_k(d.alpha(), k));
    for (j, x) in [(1, 0.3), (2, 2.0), (3, -0.8), (4, 5.0)] {
        println!("F{j}({x}) = {:+.12}", f_j(&d, j, x, k, &sp)?);
    }
    Ok(())
}
