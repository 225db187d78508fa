use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::HankelDomain;

/// A boundary function of one real variable, shareable across threads.
pub type BoundaryFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Real or imaginary part selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Part {
    Re,
    Im,
}

impl Part {
    pub fn take(self, z: Complex64) -> f64 {
        match self {
            Part::Re => z.re,
            Part::Im => z.im,
        }
    }
}

/// Built-in data families, also the `data` block of the CLI config.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum DataFamily {
    /// Data of `q = Re zᵏ`.
    PowerRe {
        k: f64,
        #[serde(default)]
        k_im: f64,
    },
    /// Data of `q = Im zᵏ`.
    PowerIm {
        k: f64,
        #[serde(default)]
        k_im: f64,
    },
    /// One part of the complex Hankel-moment data `z^s u(z)` with
    /// `u(z) = 1/(e^{−z} − 1)`.
    ZetaTrace { s: f64, part: Part },
    /// Arc-only data `g(φ) = c·sin(πφ/2α)`, which has `S = 0`, `S̃ = −2aαc`.
    ArcSine { c: f64 },
    Zero,
    /// User-supplied closures.
    Custom,
}

/// Neumann data: `g₊`, `g₋` are the angular derivatives `∂q/∂θ` on the rays
/// `θ = ±α` as functions of `r`, `g_arc` is `∂q/∂r` on `r = a` as a
/// function of `φ`.
#[derive(Clone)]
pub struct NeumannData {
    pub g_plus: BoundaryFn,
    pub g_minus: BoundaryFn,
    pub g_arc: BoundaryFn,
    /// The ray data are bounded by `C·(r/a)^decay_exponent`.
    pub decay_exponent: f64,
    pub family: DataFamily,
}

impl fmt::Debug for NeumannData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NeumannData")
            .field("decay_exponent", &self.decay_exponent)
            .field("family", &self.family)
            .finish_non_exhaustive()
    }
}

impl NeumannData {
    pub fn custom<P, M, A>(g_plus: P, g_minus: M, g_arc: A, decay_exponent: f64) -> Result<Self>
    where
        P: Fn(f64) -> f64 + Send + Sync + 'static,
        M: Fn(f64) -> f64 + Send + Sync + 'static,
        A: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if !(decay_exponent < 0.0) {
            return Err(Error::ParameterOutOfRange(format!(
                "decay exponent {decay_exponent} must be negative"
            )));
        }
        Ok(NeumannData {
            g_plus: Arc::new(g_plus),
            g_minus: Arc::new(g_minus),
            g_arc: Arc::new(g_arc),
            decay_exponent,
            family: DataFamily::Custom,
        })
    }

    pub fn zero() -> Self {
        NeumannData {
            g_plus: Arc::new(|_| 0.0),
            g_minus: Arc::new(|_| 0.0),
            g_arc: Arc::new(|_| 0.0),
            decay_exponent: -1.0,
            family: DataFamily::Zero,
        }
    }

    pub fn arc_sine(d: &HankelDomain, c: f64) -> Self {
        let p = d.p();
        NeumannData {
            g_plus: Arc::new(|_| 0.0),
            g_minus: Arc::new(|_| 0.0),
            g_arc: Arc::new(move |phi| c * (p * phi).sin()),
            decay_exponent: -1.0,
            family: DataFamily::ArcSine { c },
        }
    }

    /// Build the data for a built-in family.
    pub fn from_family(d: &HankelDomain, family: DataFamily) -> Result<Self> {
        match family {
            DataFamily::PowerRe { k, k_im } => power_solution_data(d, Complex64::new(k, k_im), Part::Re),
            DataFamily::PowerIm { k, k_im } => power_solution_data(d, Complex64::new(k, k_im), Part::Im),
            DataFamily::ZetaTrace { s, part } => Ok(zeta_trace_data(d, s, part)),
            DataFamily::ArcSine { c } => Ok(Self::arc_sine(d, c)),
            DataFamily::Zero => Ok(Self::zero()),
            DataFamily::Custom => Err(Error::Config(
                "custom data cannot be built from a family tag".into(),
            )),
        }
    }
}

/// `(r e^{iθ})^k` on the principal branch.
fn cpow_polar(r: f64, theta: f64, k: Complex64) -> Complex64 {
    (k * Complex64::new(r.ln(), theta)).exp()
}

/// Neumann data of the decaying solutions `q = Re zᵏ` or `q = Im zᵏ`
/// (`Re k < 0`).
///
/// With `zᵏ = rᵏ e^{ikθ}`: `∂_θ zᵏ = ik zᵏ` and `∂_r zᵏ = k z^{k−1}`, so
/// `g± = part(ik (re^{±iα})ᵏ)` and `g = part(k a^{k−1} e^{ikθ})`.
pub fn power_solution_data(d: &HankelDomain, k: Complex64, part: Part) -> Result<NeumannData> {
    if !(k.re < 0.0) {
        return Err(Error::ParameterOutOfRange(format!("Re k = {} must be negative", k.re)));
    }
    let alpha = d.alpha();
    let a = d.a();
    let ik = Complex64::i() * k;
    let family = match part {
        Part::Re => DataFamily::PowerRe { k: k.re, k_im: k.im },
        Part::Im => DataFamily::PowerIm { k: k.re, k_im: k.im },
    };
    Ok(NeumannData {
        g_plus: Arc::new(move |r| part.take(ik * cpow_polar(r, alpha, k))),
        g_minus: Arc::new(move |r| part.take(ik * cpow_polar(r, -alpha, k))),
        g_arc: Arc::new(move |phi| part.take(k * cpow_polar(a, phi, k) / a)),
        decay_exponent: k.re,
        family,
    })
}

/// The closed-form solution for [`power_solution_data`].
pub fn power_exact(k: Complex64, part: Part, r: f64, theta: f64) -> f64 {
    part.take(cpow_polar(r, theta, k))
}

/// `u(z) = 1/(e^{−z} − 1)`, evaluated without overflow on both half-planes.
pub fn riemann_u(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        let e = z.exp();
        e / (1.0 - e)
    } else {
        1.0 / ((-z).exp() - 1.0)
    }
}

/// Complex Hankel-moment data: `g± = (ρe^{±iα})^s u`, `g = −(i/a)(ae^{iφ})^s u`.
pub(crate) fn zeta_trace_complex(
    d: &HankelDomain,
    s: Complex64,
) -> (
    impl Fn(f64) -> Complex64 + Send + Sync,
    impl Fn(f64) -> Complex64 + Send + Sync,
    impl Fn(f64) -> Complex64 + Send + Sync,
) {
    let alpha = d.alpha();
    let a = d.a();
    let ray = move |rho: f64, th: f64| cpow_polar(rho, th, s) * riemann_u(Complex64::from_polar(rho, th));
    let gp = move |rho: f64| ray(rho, alpha);
    let gm = move |rho: f64| ray(rho, -alpha);
    let ga = move |phi: f64| {
        Complex64::new(0.0, -1.0 / a) * cpow_polar(a, phi, s) * riemann_u(Complex64::from_polar(a, phi))
    };
    (gp, gm, ga)
}

/// One part of the Hankel-moment data as real Neumann data.
pub fn zeta_trace_data(d: &HankelDomain, s: f64, part: Part) -> NeumannData {
    let (gp, gm, ga) = zeta_trace_complex(d, Complex64::new(s, 0.0));
    NeumannData {
        g_plus: Arc::new(move |r| part.take(gp(r))),
        g_minus: Arc::new(move |r| part.take(gm(r))),
        g_arc: Arc::new(move |phi| part.take(ga(phi))),
        // Exponential decay; any negative hint will do.
        decay_exponent: -4.0,
        family: DataFamily::ZetaTrace { s, part },
    }
}
