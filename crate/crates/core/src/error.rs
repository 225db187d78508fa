use thiserror::Error;

/// Errors raised by the numerical kernels and the front end.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("quadrature did not converge (achieved error {achieved:.3e}, requested {requested:.3e})")]
    NonConvergence { achieved: f64, requested: f64 },
    #[error("principal-value pole lies on an interval endpoint")]
    PoleOnEndpoint,
    #[error("semi-infinite integral appears to diverge")]
    DivergenceSuspected,
    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("invalid quadrature spec: {0}")]
    InvalidSpec(String),
    #[error("gamma function pole at a nonpositive integer")]
    PoleAtNonpositiveInteger,
    #[error("hypergeometric parameter sits on a pole: {0}")]
    ParameterPole(String),
    #[error("argument lies on a branch point or cut")]
    BranchCut,
    #[error("Mellin-Barnes contour cannot separate the pole families")]
    ContourPinch,
    #[error("zeta has a pole at s = 1")]
    PoleAtOne,
    #[error("point lies outside the domain")]
    OutsideDomain,
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("boundary data violate S = 0 (|S| = {s:.3e})")]
    ConstraintViolated { s: f64 },
    #[error("spectral parameter outside Re k < pi/(2 alpha)")]
    SpectralOutOfRange,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("pole of the integrand too close to the contour")]
    PoleNearContour,
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
