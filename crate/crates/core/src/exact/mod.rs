//! Scalars, bivariate homogeneous polynomials and linear algebra, all exact.

mod expr;
mod gaussian;
mod linalg;
mod poly;
mod rational;
mod snf;

pub use expr::parse_poly;
pub use gaussian::GaussianRational;
pub use linalg::{solve, solve_rational, Field, Matrix, Solution};
pub use poly::{poly_mul, HomogPoly};
pub use rational::{
    frac, int, parse_rational, rational_string, serialize_rationals, to_i64, Rational,
};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};
