//! Arbitrary-precision integer and dense univariate polynomial arithmetic.
//!
//! The coefficient domain is `BigInt` throughout; rationals appear only at
//! evaluation points. Polynomials are dense with ascending coefficients and
//! the zero polynomial is the empty coefficient vector. All values are
//! immutable after construction and all operations are pure.

mod factor_list;
mod unipoly;

pub use factor_list::FactorList;
pub use unipoly::UniPoly;

/// Signed arbitrary-precision integer, the coefficient domain for everything.
pub type Integer = num_bigint::BigInt;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors from exact polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactAlgError {
    /// Exact division was requested but the divisor does not divide the
    /// dividend in ℤ[t] (nonzero remainder or fractional coefficients).
    #[error("polynomial division is not exact")]
    NotDivisible,
    /// The zero polynomial has no content/primitive decomposition.
    #[error("the zero polynomial has no content decomposition")]
    ZeroPolynomial,
}
