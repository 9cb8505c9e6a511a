//! Complete factorization over ℤ[t]: modular factorization, quadratic Hensel
//! lifting, and subset recombination with trial division.

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};

use super::hensel::{lift_to_modulus, zmod, zmod_symmetric};
use super::squarefree::squarefree_decomposition_z;
use crate::exactalg::{FactorList, Integer, UniPoly};
use crate::gfpfactor::{self, primes, reduce_mod_p, GFPoly, DEFAULT_SEED};

/// A bound `B` with every coefficient of every factor candidate bounded by
/// `B` in absolute value: `2^n · ⌈√(n+1)⌉ · max|coeff| · |lc|`.
///
/// Deliberately loose; at degree ≤ 12 tightness is irrelevant, validity is
/// everything.
pub fn mignotte_bound(f: &UniPoly) -> Integer {
    let n = f.degree().expect("bound of the zero polynomial");
    let mut s = 0u64;
    while s * s < (n as u64) + 1 {
        s += 1;
    }
    (Integer::one() << n) * Integer::from(s) * f.max_abs_coeff()
        * f.leading_coeff().unwrap().abs()
}

/// Factor a nonzero polynomial into primitive irreducibles over ℤ with
/// multiplicities, using the default splitter seed.
pub fn zassenhaus_factor(f: &UniPoly) -> FactorList {
    zassenhaus_factor_seeded(f, DEFAULT_SEED)
}

/// Factor a nonzero polynomial into primitive irreducibles over ℤ.
///
/// Content and sign are split off first, then powers of `t`, then a
/// squarefree decomposition; each squarefree part goes through the modular
/// route (factor mod p, lift, recombine).
pub fn zassenhaus_factor_seeded(f: &UniPoly, seed: u64) -> FactorList {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let (signed_content, mut prim) = f.content_primitive().expect("nonzero");
    let unit = if signed_content.is_negative() { -1 } else { 1 };
    let content = signed_content.abs();

    let mut factors: Vec<(UniPoly, u32)> = Vec::new();
    if prim.deg() > 0 {
        let low = prim.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        if low > 0 {
            factors.push((UniPoly::var(), low as u32));
            prim = UniPoly::new(prim.coeffs()[low..].to_vec());
        }
    }
    if prim.deg() > 0 {
        for (part, mult) in squarefree_decomposition_z(&prim) {
            for irr in factor_squarefree(&part, seed) {
                factors.push((irr, mult));
            }
        }
    }
    FactorList::new(unit, content, factors)
}

/// Factor a primitive squarefree polynomial with positive leading
/// coefficient into primitive irreducibles.
fn factor_squarefree(f: &UniPoly, seed: u64) -> Vec<UniPoly> {
    let n = f.deg();
    if n == 1 {
        return vec![f.clone()];
    }
    let Some((p, modular_count)) = choose_prime(f) else {
        // pattern {n} seen at some prime
        return vec![f.clone()];
    };
    if modular_count == 1 {
        return vec![f.clone()];
    }

    let f_p = reduce_mod_p(f, p).expect("chosen prime is prime").make_monic();
    let gf_factors: Vec<GFPoly> = gfpfactor::factor(&f_p, seed)
        .factors
        .into_iter()
        .map(|(g, m)| {
            debug_assert!(m == 1, "squarefree reduction");
            g
        })
        .collect();

    // lift to the smallest p^k > 2B
    let bound = mignotte_bound(f);
    let two_b = 2 * &bound;
    let mut pk = Integer::from(p);
    while pk <= two_b {
        pk *= p;
    }
    let lifted = lift_to_modulus(f, &gf_factors, p, &pk);
    let reduced: Vec<UniPoly> = lifted.into_iter().map(|g| zmod(&g, &pk)).collect();
    recombine(f, reduced, &pk)
}

/// Pick the lifting prime: among the sieve schedule (odd primes not dividing
/// the leading coefficient, squarefree reductions only), the one giving the
/// fewest modular factors, smallest first on ties. Returns `None` when some
/// prime already shows the polynomial irreducible. Extends the schedule past
/// the usual budget if every early prime gives a bad reduction.
fn choose_prime(f: &UniPoly) -> Option<(u64, usize)> {
    let n = f.deg();
    let lc = f.leading_coeff().unwrap().clone();
    let mut best: Option<(u64, usize)> = None;
    let mut seen = 0usize;
    // A squarefree polynomial has only finitely many primes dividing its
    // discriminant, so this loop terminates.
    for p in primes::odd_primes().filter(|&p| !lc.is_multiple_of(&Integer::from(p))) {
        match gfpfactor::degree_pattern(f, p).expect("odd prime") {
            Ok(pattern) => {
                if pattern.is_single(n) {
                    return None;
                }
                let count = pattern.len();
                if best.as_ref().is_none_or(|&(_, c)| count < c) {
                    best = Some((p, count));
                }
                seen += 1;
                if seen >= super::DEFAULT_PRIME_BUDGET {
                    break;
                }
            }
            Err(_) => continue,
        }
    }
    Some(best.expect("at least one squarefree reduction seen"))
}

/// Subset recombination: assemble true factors of `rest` from the monic
/// lifted modular factors, trying subsets in increasing size with trial
/// exact division over ℤ.
fn recombine(f: &UniPoly, mut modular: Vec<UniPoly>, pk: &Integer) -> Vec<UniPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut size = 1usize;
    'sizes: while 2 * size <= modular.len() {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let candidate = candidate_factor(&rest, &modular, &subset, pk);
            if !candidate.is_one() {
                if let Ok(quotient) = rest.divexact(&candidate) {
                    rest = quotient;
                    out.push(candidate);
                    for &i in subset.iter().rev() {
                        modular.remove(i);
                    }
                    continue 'sizes; // same size, smaller pool
                }
            }
            if !next_combination(&mut subset, modular.len()) {
                break;
            }
        }
        size += 1;
    }
    if rest.deg() >= 1 {
        out.push(rest);
    } else {
        debug_assert!(rest.is_one(), "leftover unit must be 1, got {rest}");
    }
    out
}

/// The integer candidate for a subset: `lc(rest) · Π modular[i]` in
/// symmetric residues mod `p^k`, taken primitive.
fn candidate_factor(
    rest: &UniPoly,
    modular: &[UniPoly],
    subset: &[usize],
    pk: &Integer,
) -> UniPoly {
    let mut prod = UniPoly::constant(rest.leading_coeff().unwrap().clone());
    for &i in subset {
        prod = zmod(&(&prod * &modular[i]), pk);
    }
    zmod_symmetric(&prod, pk).primitive_part()
}

/// Advance `subset` to the next size-k index combination below `n`
/// (lexicographic). Returns false when exhausted.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuboidpoly::{cuboid_poly, decic_cofactor, octic_cofactor, ParamTriple};

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn factor_unit_triple_polynomial() {
        let f = cuboid_poly(&ParamTriple::from_u64(1, 1, 1).unwrap());
        let fl = zassenhaus_factor(&f);
        let expected = FactorList::new(
            1,
            Integer::one(),
            vec![(p(&[-1, 1]), 2), (p(&[1, 1]), 2), (p(&[1, 0, 1]), 4)],
        );
        assert_eq!(fl, expected);
        assert_eq!(fl.expand(), f);
    }

    #[test]
    fn factor_a_eq_u_case() {
        // (2,3,2): (t^2+4)^4 (t-3)^2 (t+3)^2
        let f = cuboid_poly(&ParamTriple::from_u64(2, 3, 2).unwrap());
        let fl = zassenhaus_factor(&f);
        let expected = FactorList::new(
            1,
            Integer::one(),
            vec![(p(&[4, 0, 1]), 4), (p(&[-3, 1]), 2), (p(&[3, 1]), 2)],
        );
        assert_eq!(fl, expected);
    }

    #[test]
    fn factor_square_case_with_irreducible_cofactor() {
        // (a,b,u) = (2,4,1) from (p,q) = (2,1): (t-2)(t+2) * decic, decic irreducible
        let f = cuboid_poly(&ParamTriple::from_u64(2, 4, 1).unwrap());
        let fl = zassenhaus_factor(&f);
        let decic = decic_cofactor(&2.into(), &1.into());
        let expected = FactorList::new(
            1,
            Integer::one(),
            vec![(p(&[-2, 1]), 1), (p(&[2, 1]), 1), (decic, 1)],
        );
        assert_eq!(fl, expected);
    }

    #[test]
    fn irreducible_octic_is_single_factor() {
        let f = octic_cofactor(&1.into(), &2.into());
        let fl = zassenhaus_factor(&f);
        assert!(fl.is_trivial(), "got {fl}");
    }

    #[test]
    fn factor_with_content_and_sign() {
        // -6 (t-1)(t+1) = -6t^2 + 6
        let f = p(&[6, 0, -6]);
        let fl = zassenhaus_factor(&f);
        let expected = FactorList::new(
            -1,
            Integer::from(6),
            vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)],
        );
        assert_eq!(fl, expected);
        assert_eq!(fl.expand(), f);
    }

    #[test]
    fn factor_powers_of_t() {
        let f = p(&[0, 0, 0, 2, 2]); // 2t^3 (t+1)
        let fl = zassenhaus_factor(&f);
        let expected = FactorList::new(
            1,
            Integer::from(2),
            vec![(p(&[0, 1]), 3), (p(&[1, 1]), 1)],
        );
        assert_eq!(fl, expected);
    }

    #[test]
    fn factor_non_monic_product() {
        // (2t+3)(3t-5)(t^2+t+1)
        let f = p(&[3, 2]) * p(&[-5, 3]) * p(&[1, 1, 1]);
        let fl = zassenhaus_factor(&f);
        let expected = FactorList::new(
            1,
            Integer::one(),
            vec![(p(&[3, 2]), 1), (p(&[-5, 3]), 1), (p(&[1, 1, 1]), 1)],
        );
        assert_eq!(fl, expected);
    }

    #[test]
    fn factor_x4_plus_1_family() {
        // irreducible over Z yet reducible mod every prime
        assert!(zassenhaus_factor(&p(&[1, 0, 0, 0, 1])).is_trivial());
        // swinnerton-dyer style: (t^2-2)(t^2-3)(t^2-6) has only quadratic factors
        let f = p(&[-2, 0, 1]) * p(&[-3, 0, 1]) * p(&[-6, 0, 1]);
        let fl = zassenhaus_factor(&f);
        assert_eq!(fl.len(), 3);
        assert_eq!(fl.expand(), f);
    }

    #[test]
    fn mignotte_bound_covers_known_factors() {
        for (f, factor) in [
            (p(&[-1, 0, 1]), p(&[1, 1])),
            (p(&[-1, 0, 0, 0, 1]), p(&[1, 0, 1])),
        ] {
            let b = mignotte_bound(&f);
            assert!(factor.max_abs_coeff() <= b);
        }
        let f = cuboid_poly(&ParamTriple::from_u64(1, 2, 3).unwrap());
        let b = mignotte_bound(&f);
        for (g, _) in zassenhaus_factor(&f).factors() {
            assert!(g.max_abs_coeff() <= b);
        }
    }

    #[test]
    fn next_combination_enumerates_all() {
        let mut c = vec![0usize, 1];
        let mut seen = vec![c.clone()];
        while next_combination(&mut c, 4) {
            seen.push(c.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
