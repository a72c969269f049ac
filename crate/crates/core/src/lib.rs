//! Boundary polynomials of finite graphs and the planar polynomial vector
//! fields assembled from them.
//!
//! The crate is `no_std` (it needs `alloc`). Everything on the exact path
//! uses arbitrary-precision rationals; floating point only appears in the
//! [`simulate`] module, which integrates the systems numerically and looks
//! for limit cycles on a Poincaré section.
//!
//! Layout:
//!
//! * [`graph`]: simple undirected graphs on at most [`ENUMERATION_CAP`]
//!   vertices, the classical families, disjoint unions, the exterior vertex
//!   boundary and the graph-spec mini-language.
//! * [`poly`]: dense exact bivariate and univariate polynomials.
//! * [`boundary`]: the boundary polynomial `B(G; x, y)` by subset enumeration
//!   and its closed forms on complete and empty graphs.
//! * [`weighted`]: the parity-weighted boundary polynomial, held as affine
//!   forms in the free weights `k` and `u`.
//! * [`dynsys`]: system builders, equilibrium classification, Liapunov
//!   numbers, radius polynomials and the inverse weight fit.
//! * [`simulate`]: RK4/RKF45 integration, return maps, cycle detection and
//!   circle integrals.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod boundary;
pub mod dynsys;
mod error;
pub mod graph;
pub mod poly;
pub mod rational;
pub mod simulate;
pub mod weighted;

pub use error::{Error, Result};
pub use graph::{Family, Graph, VertexSet, ENUMERATION_CAP};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{BivariatePolynomial, UnivariatePolynomial};
