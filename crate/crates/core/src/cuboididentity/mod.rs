//! Exact symbolic verification of the cuboid edge/diagonal identities.
//!
//! The rational parametrization expresses the three edges and three face
//! diagonals of a unit-space-diagonal rational cuboid through parameters
//! `(alpha, beta, upsilon)` and an auxiliary parameter `z`. Two of the six
//! defining equalities hold identically; the remaining four hold modulo a
//! single degree-12 constraint polynomial `E` once `z` is replaced by its
//! defining rational expression. This module carries the sparse multivariate
//! arithmetic needed to check all of that exactly over ℤ.

mod identities;
mod multipoly;
mod rational_expr;

pub use identities::{
    constraint_poly, cuboid_quantities, reduce_by_constraint, verify_identical,
    verify_mod_constraint, z_substitution, CuboidEquality, CuboidQuantities, ModEOutcome,
};
pub use multipoly::{Monomial, MultiPoly, ALPHA, BETA, NVARS, UPSILON, VARS, Z};
pub use rational_expr::RationalExpr;

/// Errors from multivariate arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MultiPolyError {
    #[error("multivariate division is not exact")]
    NotDivisible,
}
