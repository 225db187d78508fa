//! Residual reports for the identities implied by the global relations.

use std::f64::consts::PI;

use hankel_laplace::identities::{run_suite, Suite, DEFAULT_TOLERANCE};
use hankel_laplace::{HankelDomain, QuadratureSpec};

fn main() -> hankel_laplace::Result<()> {
    let d = HankelDomain::new(1.0, 3.0 * PI / 4.0)?;
    let reports = run_suite(Suite::All, &d, &QuadratureSpec::default(), DEFAULT_TOLERANCE)?;
    for r in &reports {
        println!(
            "{:>7}: {:3} points  max {:.2e}  rms {:.2e}  max Im {:.2e}  {:?}",
            r.identity_id,
            r.grid.len(),
            r.max_abs,
            r.rms,
            r.max_imag,
            r.verdict
        );
    }
    Ok(())
}
