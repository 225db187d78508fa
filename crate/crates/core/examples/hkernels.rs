//! The h-integrals in κ-coordinates, their closed forms, and the
//! principal-value power integral.

use hankel_laplace::hkernels::{
    direct_pv_power_integral, f_kappa, h, h_closed, h_section5, pv_power_integral, KappaArgs, Path, Route,
};
use hankel_laplace::{Complex64, QuadratureSpec};

fn main() -> hankel_laplace::Result<()> {
    let sp = QuadratureSpec::with_tol(1e-12, 1e-14);
    let args = KappaArgs::new(0.7, 0.4, 0.5)?;
    for j in 1..=7 {
        let n = h(j, &args, &sp)?;
        let c = h_closed(j, &args)?;
        let real = if [1, 2, 5, 6, 7].contains(&j) { format!("{:+.12}", h_section5(j, &args)?) } else { "-".into() };
        println!("h{j}: quadrature {n:+.12}  closed {:+.12} (im {:.1e})  real form {real}", c.value, c.imag);
    }
    for j in 1..=4 {
        let f = f_kappa(j, &args, Route::Closed, &sp)?;
        println!("F{j} in κ-coordinates: {:+.12}", f.value);
    }

    let path = Path::Arc { center: Complex64::new(0.0, 0.0), radius: 1.0, t1: -1.2, t2: 1.0 };
    let p = Complex64::new(0.6, 0.2);
    let z0 = Complex64::from_polar(1.0, 0.3);
    let closed = pv_power_integral(p, z0, &path, true)?;
    let direct = direct_pv_power_integral(p, z0, &path, &sp)?;
    println!("PV ∮ z^p/(z − z0) dz: closed {closed:.12}, quadrature {direct:.12}");
    Ok(())
}
