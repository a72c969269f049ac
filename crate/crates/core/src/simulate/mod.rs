//! Floating-point integration of planar systems, return maps on the positive
//! x-axis, limit-cycle detection and integrals along the unit circle.

mod circle;
mod cycles;
mod integrator;
mod poincare;

pub use circle::{
    circle_divergence_integral, circle_equilibria_scan, circle_integral_pi_coefficient,
    periodic_integral, theta_corrected_exponent, CircleZero, Quadrature, ZeroKind,
};
pub use cycles::{
    detect_limit_cycles, CycleReport, CycleStability, InconclusiveSeed, LimitCycleEstimate,
    CONVERGENCE_TOL, FLAT_TOL, MERGE_TOL, STABILITY_PROBE,
};
pub use integrator::{
    integrate, Direction, IntegratorConfig, Method, Termination, Trajectory, DIVERGENCE_RADIUS,
};
pub use poincare::{
    poincare_crossings, return_map, Crossing, CrossingOrientation, ReturnFailure, ReturnHit,
};
