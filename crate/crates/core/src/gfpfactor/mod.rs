//! Polynomial arithmetic and complete factorization over prime fields GF(p).
//!
//! Field elements are machine-word residues (the callers only ever need small
//! primes), polynomials are dense with ascending coefficients. Factorization
//! is squarefree decomposition, then distinct-degree splitting, then
//! randomized Cantor–Zassenhaus equal-degree splitting. The randomized
//! splitter takes an explicit seed so runs are reproducible; its output is
//! sorted, so the result is deterministic regardless of the seed.

mod factor;
mod gfpoly;
pub mod primes;

pub use factor::{
    ddf, degree_pattern, edf, factor, squarefree_decomposition, DegreePattern, GfFactorization,
    SkipReason, DEFAULT_SEED,
};
pub use gfpoly::{reduce_mod_p, GFPoly};

/// Errors from GF(p) polynomial construction and factorization.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GfpError {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("polynomial is not squarefree modulo p")]
    NotSquarefree,
}
