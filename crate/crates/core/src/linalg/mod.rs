//! Exact linear algebra over ℚ (arbitrary precision) and over 𝔽₂.

mod f2;
mod matrix;
mod subspace;

pub use f2::F2Matrix;
pub use matrix::{parse_matrix_literal, ExactMatrix};
pub use subspace::{subspace_equal, Subspace};

/// Arbitrary-precision rational in canonical form.
pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
