//! Degree-pattern sieve: cheap irreducibility certificates from reductions
//! modulo small primes.

use std::collections::BTreeSet;

use num_integer::Integer as IntegerOps;

use super::{Certificate, IrreducibilityVerdict, ZirredError};
use crate::exactalg::{Integer, UniPoly};
use crate::gfpfactor::{degree_pattern, primes, SkipReason};

/// Try to certify irreducibility from degree patterns modulo the first
/// `prime_budget` odd primes that do not divide the leading coefficient.
///
/// A factor of degree `d` over ℤ reduces to a factor of degree `d` modulo
/// every such prime, so `d` must be an achievable subset sum of every
/// sampled pattern. Returns `Irreducible` when one pattern is `{deg f}` or
/// when the intersection of achievable proper degrees goes empty; `None`
/// when the budget runs out inconclusively. Non-squarefree reductions are
/// skipped (they still consume budget).
///
/// Requires a primitive squarefree input of degree ≥ 2.
pub fn degree_set_sieve(
    f: &UniPoly,
    prime_budget: usize,
) -> Result<Option<IrreducibilityVerdict>, ZirredError> {
    let n = f.degree().expect("sieve on the zero polynomial");
    assert!(n >= 2, "sieve needs degree >= 2");
    if f.gcd(&f.derivative()).deg() > 0 {
        return Err(ZirredError::NotSquarefree);
    }
    let lc = f.leading_coeff().unwrap().clone();

    let mut evidence: Vec<(u64, crate::gfpfactor::DegreePattern)> = Vec::new();
    let mut possible: Option<BTreeSet<usize>> = None;

    let schedule = primes::odd_primes()
        .filter(|&p| !lc.is_multiple_of(&Integer::from(p)))
        .take(prime_budget);
    for p in schedule {
        let pattern = match degree_pattern(f, p).expect("odd primes are prime") {
            Ok(pat) => pat,
            Err(SkipReason::NotSquarefree) => continue,
            Err(SkipReason::LeadingCoeffVanishes) => unreachable!("lc filtered above"),
        };
        if pattern.is_single(n) {
            return Ok(Some(IrreducibilityVerdict::Irreducible(
                Certificate::SievePrime { prime: p, pattern },
            )));
        }
        let sums: BTreeSet<usize> = pattern
            .subset_sums()
            .into_iter()
            .filter(|&d| d >= 1 && d < n)
            .collect();
        evidence.push((p, pattern));
        possible = Some(match possible {
            None => sums,
            Some(prev) => prev.intersection(&sums).copied().collect(),
        });
        if possible.as_ref().is_some_and(|s| s.is_empty()) {
            return Ok(Some(IrreducibilityVerdict::Irreducible(
                Certificate::DegreeSetIntersection { evidence },
            )));
        }
    }
    Ok(None)
}
