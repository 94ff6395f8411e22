//! Exact numeric substrate: big rationals, dense univariate polynomials,
//! polynomial and integer matrices, generalized binomial coefficients.

mod binom;
mod matrix;
mod poly;

pub use binom::{binomial, factorial};
pub use matrix::{IntMatrix, PolyMatrix};
pub use poly::{PolyFraction, Polynomial};
pub(crate) use poly::render_poly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for a big integer.
pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}
