//! Exact arithmetic kernel: arbitrary precision integers and rationals,
//! dyadic numbers, real intervals with dyadic endpoints and complex boxes.

mod complex;
mod dyadic;
mod interval;

pub use complex::{complex_box_magnitude_ub, disc_to_complex_box, ComplexBox};
pub use dyadic::Dyadic;
pub use interval::{interval_add, interval_mul, interval_sub, RealInterval};

/// Arbitrary precision signed integer.
pub type ExactInt = num_bigint::BigInt;

/// Normalized arbitrary precision rational (positive denominator, reduced).
pub type Rational = num_rational::BigRational;
