//! The explicit Neumann solution, Dirichlet traces, boundary moments and the
//! Hankel moment `S(s)`.

mod data;
mod moments;
mod solve;

pub use data::{
    power_exact, power_solution_data, riemann_u, zeta_trace_data, BoundaryFn, DataFamily, NeumannData, Part,
};
pub use moments::{
    asymptotic, asymptotic_from_moments, hankel_moment, hankel_moment_closed, hankel_moment_riemann,
    moment_s, moment_s_tilde, zeta_relation_residual,
};
pub use solve::{
    dirichlet_arc, dirichlet_diff, dirichlet_ray, dirichlet_sum, solve, solve_grid, ArcKernel, FieldSample,
};

pub(crate) use solve::{arc_integral, ray_integral};
