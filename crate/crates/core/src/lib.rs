//! Exact-arithmetic toolkit for the cuboid polynomial families.
//!
//! Everything here computes over the integers (or prime fields) with no
//! rounding anywhere:
//!
//! - [`exactalg`] — arbitrary-precision integers, rationals, dense univariate
//!   polynomials over ℤ, and canonical factor lists.
//! - [`cuboidpoly`] — constructors for the degree-12 cuboid polynomial and its
//!   special-case cofactors, parameter normalization, and the special-case
//!   classifier with its closed-form factorizations.
//! - [`gfpfactor`] — polynomial arithmetic and complete factorization over
//!   GF(p) for word-sized primes (distinct-degree + Cantor–Zassenhaus).
//! - [`zirred`] — irreducibility decisions over ℤ[t] with machine-checkable
//!   certificates, backed by a degree-pattern sieve and a Zassenhaus
//!   factorizer (Hensel lifting plus subset recombination).
//! - [`cuboididentity`] — sparse multivariate arithmetic used to verify the
//!   symbolic cuboid edge/diagonal identities exactly.

pub mod cuboididentity;
pub mod cuboidpoly;
pub mod exactalg;
pub mod gfpfactor;
pub mod zirred;
