//! Explicit solution of the Neumann problem for the Laplace equation in the
//! domain exterior to a Hankel contour, the associated global relations, and
//! residual checks for the hypergeometric and Meijer-G identities they imply.
//!
//! The crate is organised bottom-up:
//!
//! * [`quadrature`]: adaptive Gauss–Legendre integration with log-singular,
//!   principal-value and semi-infinite variants.
//! * [`specfun`]: log-gamma, ₂F₁(1,b;b+1;z), ₃F₂(½,1,1;b₁,b₂;x), Lerch Φ,
//!   Riemann ζ and a Mellin–Barnes evaluator for G²¹₃₃.
//! * [`geometry`]: the domain, its conformal map to the upper half-plane and
//!   the κ-coordinates.
//! * [`solver`]: the Poisson-type solution formula, Dirichlet traces,
//!   boundary moments and the Hankel moment S(s).
//! * [`globalrel`]: global-relation residuals and the functionals F₁–F₄.
//! * [`hkernels`]: the h-integrals in κ-coordinates, their closed forms and
//!   the principal-value power integral.
//! * [`identities`]: residual reports for every identity.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod globalrel;
pub mod hkernels;
pub mod identities;
pub mod quadrature;
pub mod solver;
pub mod specfun;

pub use error::{Error, Result};
pub use geometry::HankelDomain;
pub use num_complex::Complex64;
pub use quadrature::QuadratureSpec;
