//! Exact computations on the Cayley Grassmannian, the variety of
//! four-dimensional subalgebras of the complexified octonions, viewed
//! inside `G(3,7)` through imaginary parts.
//!
//! Everything is exact: rationals, Gaussian rationals and bivariate
//! homogeneous polynomials over the rank-two torus of `G2`.

pub mod ambient;
pub mod cayley;
pub mod equivariant;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod invariants;
pub mod octonions;
pub mod weightmodel;

pub use error::{Error, Result};
