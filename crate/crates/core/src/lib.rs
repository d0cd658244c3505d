//! Exact isolation of the real solutions of a zero-dimensional system
//! `f(x, y) = g(x, y) = 0` with integer coefficients.
//!
//! The pipeline projects the solutions onto both axes with resultants,
//! separates every real projected root from all other complex roots by
//! certified disc tests, and validates each candidate pair by interval
//! exclusion or by an inclusion predicate that combines the resultant lower
//! bounds with Hadamard bounds on the cofactors. No change of coordinates is
//! ever performed.

pub mod arith;
pub mod elim;
pub mod emit;
pub mod error;
pub mod parse;
pub mod poly;
pub mod separate;
pub mod solver;
pub mod uniroot;
pub mod validate;

pub use error::{Error, Result};
pub use parse::{parse_polynomial, parse_system};
pub use poly::{BivariatePolynomial, UnivariatePolynomial, Var};
pub use solver::{solve, SolveOptions, SolveResult, SystemSpec};
pub use validate::{QueryBox, SolutionBox};
