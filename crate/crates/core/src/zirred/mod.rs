//! Irreducibility over ℤ[t], decided instance by instance with re-checkable
//! certificates.
//!
//! [`is_irreducible`] tries the cheap evidence first — rational roots, a
//! squarefree guard, then the degree-pattern sieve across small primes — and
//! only falls back to the full Zassenhaus factorizer when the sieve is
//! inconclusive. Every verdict carries enough evidence to be re-derived:
//! a single prime whose pattern is `{deg f}`, a set of primes whose
//! compatible factor-degree sums intersect trivially, or a complete
//! factorization.

mod hensel;
mod roots;
mod sieve;
mod squarefree;
mod zassenhaus;

use std::fmt;

pub use hensel::hensel_lift;
pub use roots::rational_roots;
pub use sieve::degree_set_sieve;
pub use squarefree::squarefree_decomposition_z;
pub use zassenhaus::{mignotte_bound, zassenhaus_factor, zassenhaus_factor_seeded};

use crate::exactalg::{FactorList, UniPoly};
use crate::gfpfactor::{degree_pattern, DegreePattern, DEFAULT_SEED};

/// Number of sieve primes tried before falling back to full factorization.
pub const DEFAULT_PRIME_BUDGET: usize = 25;

/// Errors from the irreducibility engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZirredError {
    #[error("input must be squarefree")]
    NotSquarefree,
    #[error("Hensel lifting precondition violated: {0}")]
    LiftFailure(&'static str),
}

/// Machine-checkable evidence for an `Irreducible` verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// One prime reduces the polynomial to a single irreducible of full
    /// degree.
    SievePrime { prime: u64, pattern: DegreePattern },
    /// A set of primes whose achievable factor-degree sums rule out every
    /// proper split.
    DegreeSetIntersection { evidence: Vec<(u64, DegreePattern)> },
    /// A complete factorization (a single factor of multiplicity one).
    FullFactorization(FactorList),
}

impl Certificate {
    /// Stable machine-readable kind name.
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::SievePrime { .. } => "sieve_prime",
            Certificate::DegreeSetIntersection { .. } => "degree_sets",
            Certificate::FullFactorization(_) => "factorization",
        }
    }

    /// Re-derive the verdict from the cited evidence alone.
    pub fn check(&self, f: &UniPoly) -> bool {
        let Some(n) = f.degree() else { return false };
        match self {
            Certificate::SievePrime { prime, pattern } => {
                match degree_pattern(f, *prime) {
                    Ok(Ok(recomputed)) => recomputed == *pattern && pattern.is_single(n),
                    _ => false,
                }
            }
            Certificate::DegreeSetIntersection { evidence } => {
                if evidence.is_empty() {
                    return false;
                }
                let mut possible: Option<std::collections::BTreeSet<usize>> = None;
                for (p, pattern) in evidence {
                    match degree_pattern(f, *p) {
                        Ok(Ok(recomputed)) if recomputed == *pattern => {}
                        _ => return false,
                    }
                    let sums: std::collections::BTreeSet<usize> = pattern
                        .subset_sums()
                        .into_iter()
                        .filter(|&d| d >= 1 && d < n)
                        .collect();
                    possible = Some(match possible {
                        None => sums,
                        Some(prev) => prev.intersection(&sums).copied().collect(),
                    });
                }
                possible.is_some_and(|s| s.is_empty())
            }
            Certificate::FullFactorization(fl) => fl.expand() == *f,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::SievePrime { prime, pattern } => {
                write!(f, "sieve_prime(p={prime};pattern={pattern})")
            }
            Certificate::DegreeSetIntersection { evidence } => {
                write!(f, "degree_sets(")?;
                for (i, (p, pat)) in evidence.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "p={p}:{pat}")?;
                }
                write!(f, ")")
            }
            Certificate::FullFactorization(fl) => {
                write!(f, "factorization({} distinct factors)", fl.len())
            }
        }
    }
}

/// The outcome of an irreducibility decision. Reducible verdicts always
/// carry a full factorization that reconstructs the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Irreducible(Certificate),
    Reducible(FactorList),
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible(_))
    }

    /// Stable status name for reports.
    pub fn status(&self) -> &'static str {
        match self {
            IrreducibilityVerdict::Irreducible(_) => "irreducible",
            IrreducibilityVerdict::Reducible(_) => "reducible",
        }
    }

    /// Short certificate description for reports.
    pub fn certificate_summary(&self) -> String {
        match self {
            IrreducibilityVerdict::Irreducible(c) => c.to_string(),
            IrreducibilityVerdict::Reducible(fl) => format!(
                "factorization({} distinct factors, total multiplicity {})",
                fl.len(),
                fl.total_multiplicity()
            ),
        }
    }

    /// Re-check the verdict against its own evidence.
    pub fn check(&self, f: &UniPoly) -> bool {
        match self {
            IrreducibilityVerdict::Irreducible(c) => {
                let sound = c.check(f);
                match c {
                    Certificate::FullFactorization(fl) => sound && fl.is_trivial(),
                    _ => sound,
                }
            }
            IrreducibilityVerdict::Reducible(fl) => {
                fl.expand() == *f && !fl.is_trivial()
            }
        }
    }
}

/// Decide irreducibility of a primitive polynomial of degree ≥ 1.
///
/// Uses the default prime budget and splitter seed; see
/// [`is_irreducible_with`].
pub fn is_irreducible(f: &UniPoly) -> IrreducibilityVerdict {
    is_irreducible_with(f, DEFAULT_PRIME_BUDGET, DEFAULT_SEED)
}

/// Decide irreducibility: rational roots, then the degree-set sieve, then
/// full factorization as a last resort.
pub fn is_irreducible_with(f: &UniPoly, prime_budget: usize, seed: u64) -> IrreducibilityVerdict {
    let n = f.degree().expect("irreducibility of the zero polynomial");
    assert!(n >= 1, "irreducibility needs degree >= 1");
    debug_assert!(f.is_primitive(), "irreducibility input must be primitive");

    if n == 1 {
        let fl = FactorList::new(1, num_traits::One::one(), vec![(f.clone(), 1)]);
        return IrreducibilityVerdict::Irreducible(Certificate::FullFactorization(fl));
    }
    if !rational_roots(f).is_empty() {
        return IrreducibilityVerdict::Reducible(zassenhaus_factor_seeded(f, seed));
    }
    if f.gcd(&f.derivative()).deg() > 0 {
        // repeated factor
        return IrreducibilityVerdict::Reducible(zassenhaus_factor_seeded(f, seed));
    }
    if let Some(verdict) =
        degree_set_sieve(f, prime_budget).expect("squarefree checked above")
    {
        return verdict;
    }
    let fl = zassenhaus_factor_seeded(f, seed);
    if fl.is_trivial() {
        IrreducibilityVerdict::Irreducible(Certificate::FullFactorization(fl))
    } else {
        IrreducibilityVerdict::Reducible(fl)
    }
}
