//! Planar polynomial systems built from boundary polynomials, and the exact
//! quantities attached to them.

mod equilibrium;
mod fit;
mod lyapunov;
mod radius;
mod roots;
mod system;

pub use equilibrium::{classify_equilibrium, EigenValues, EquilibriumClass, EquilibriumKind};
pub use fit::{fit_weight_params, FitEquation, FitOutcome, InfeasibilityCertificate};
pub use lyapunov::{
    general_lyapunov_number, lyapunov_from_coefficients, lyapunov_number, BifurcationKind,
    GeneralLyapunovResult, HopfCoefficients, HopfSpec, LyapunovResult, Sign,
};
pub use radius::{
    lienard_unique_cycle_check, max_local_cycles, radius_coefficient_scale, radius_polynomial,
    RadiusPolynomial, UniqueCycleVerdict,
};
pub use roots::{positive_roots, PositiveRoot};
pub use system::{
    build_circle_system1, build_circle_system2, build_example1, build_eps_lienard,
    build_general_hopf, build_hopf, build_lienard, check_hopf_graph, hopf_return_derivative,
    FloatField, PlanarSystem,
};
