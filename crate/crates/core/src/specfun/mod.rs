//! Special functions: gamma family, Riemann zeta, the unit-numerator Gauss
//! function `₂F₁(1, b; b+1; z)`, the `₃F₂(½,1,1;b₁,b₂;x)` family and a
//! Mellin–Barnes evaluator for `G²¹₃₃`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

mod gamma;
mod hyp2f1;
mod hyp3f2;
mod meijer;
mod zeta;

pub use gamma::{digamma, gamma, gamma_real, ln_gamma, ln_gamma_real, recip_gamma, recip_gamma_real};
pub use hyp2f1::{f_tilde, hyp2f1_1b, lerch_phi};
pub use hyp3f2::{hyp2f1_half1, hyp3f2_half11, hyp3f2_half11_integral, hyp3f2_half11_series};
pub use meijer::{meijer_g2133, meijer_g2133_with, MbContour};
pub use zeta::zeta;

/// Which side of a branch cut a value was taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BranchNote {
    /// Argument is off every cut.
    Principal,
    /// Argument on a cut, value continued from above.
    ContinuedAbove,
    /// Argument on a cut, value continued from below.
    ContinuedBelow,
}

/// A hypergeometric value with its branch bookkeeping and error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HypergeomValue {
    pub value: Complex64,
    pub branch_note: BranchNote,
    pub est_error: f64,
}
