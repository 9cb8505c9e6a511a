use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gfpoly::{reduce_mod_p, GFPoly};
use super::GfpError;
use crate::exactalg::UniPoly;

/// Default seed for the randomized equal-degree splitter. The factor set it
/// produces is unique and gets sorted, so the seed only affects runtime.
pub const DEFAULT_SEED: u64 = 1;

/// Multiset of irreducible-factor degrees of a squarefree reduction,
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreePattern(Vec<usize>);

impl DegreePattern {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        DegreePattern(degrees)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    /// Sum of all entries (the degree of the factored polynomial).
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when the pattern is the single entry `{n}`, i.e. the reduction
    /// is irreducible of full degree.
    pub fn is_single(&self, n: usize) -> bool {
        self.0 == [n]
    }

    /// Every degree a factor of the original polynomial could reduce to:
    /// all sub-multiset sums, 0 through the total.
    pub fn subset_sums(&self) -> BTreeSet<usize> {
        let mut sums = BTreeSet::new();
        sums.insert(0usize);
        for &d in &self.0 {
            let snapshot: Vec<usize> = sums.iter().copied().collect();
            for s in snapshot {
                sums.insert(s + d);
            }
        }
        sums
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}

/// Why a prime contributes no degree pattern for a given polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipReason {
    /// `p` divides the leading coefficient, so the reduction drops degree.
    LeadingCoeffVanishes,
    /// The reduction is not squarefree.
    NotSquarefree,
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkipReason::LeadingCoeffVanishes => write!(f, "leading coefficient vanishes"),
            SkipReason::NotSquarefree => write!(f, "not squarefree"),
        }
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial.
///
/// Returns `(part, d)` pairs where each part is the product of all monic
/// irreducible factors of degree exactly `d`; the parts multiply back to the
/// input. Errors with [`GfpError::NotSquarefree`] when the input is not.
pub fn ddf(f: &GFPoly) -> Result<Vec<(GFPoly, usize)>, GfpError> {
    assert!(f.is_monic(), "ddf requires a monic input");
    if !f.is_squarefree() {
        return Err(GfpError::NotSquarefree);
    }
    let p = f.modulus();
    let x = GFPoly::var(p);
    let mut parts = Vec::new();
    let mut v = f.clone();
    let mut h = x.rem(&v);
    let mut d = 0usize;
    while v.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&BigUint::from(p), &v);
        let g = h.sub(&x.rem(&v)).gcd(&v);
        if !g.is_one() && !g.is_zero() {
            parts.push((g.clone(), d));
            v = v.div_rem(&g).0;
            if v.deg() == 0 {
                break;
            }
            h = h.rem(&v);
        }
    }
    if v.deg() > 0 {
        let d = v.deg();
        parts.push((v, d));
    }
    Ok(parts)
}

/// Equal-degree factorization (Cantor–Zassenhaus): split a monic squarefree
/// product of distinct irreducibles, all of degree `d`, into the sorted list
/// of those irreducibles. Randomized internally from `seed`.
pub fn edf(part: &GFPoly, d: usize, seed: u64) -> Vec<GFPoly> {
    assert!(part.is_monic(), "edf requires a monic input");
    assert!(d >= 1 && part.deg().is_multiple_of(d), "degree must divide");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(part.deg() / d);
    edf_split(part, d, &mut rng, &mut out);
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn edf_split(part: &GFPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<GFPoly>) {
    if part.deg() == d {
        out.push(part.clone());
        return;
    }
    let p = part.modulus();
    let factor = loop {
        let r = random_nonconstant(p, part.deg(), rng);
        let g = r.gcd(part);
        if !g.is_one() && g.deg() < part.deg() {
            break g;
        }
        let w = if p == 2 {
            // Trace map over GF(2): r + r^2 + r^4 + ... splits the product.
            let mut acc = r.clone();
            let mut cur = r.clone();
            for _ in 1..d {
                cur = cur.mul(&cur).rem(part);
                acc = acc.add(&cur);
            }
            acc
        } else {
            let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            r.pow_mod(&exp, part).sub(&GFPoly::one(p))
        };
        let g = w.gcd(part);
        if !g.is_one() && g.deg() < part.deg() {
            break g;
        }
    };
    let rest = part.div_rem(&factor).0;
    edf_split(&factor.make_monic(), d, rng, out);
    edf_split(&rest.make_monic(), d, rng, out);
}

fn random_nonconstant(p: u64, below_deg: usize, rng: &mut ChaCha8Rng) -> GFPoly {
    loop {
        let coeffs: Vec<u64> = (0..below_deg).map(|_| rng.gen_range(0..p)).collect();
        let r = GFPoly::from_reduced(p, coeffs);
        if r.degree().unwrap_or(0) >= 1 {
            return r;
        }
    }
}

/// Squarefree decomposition of a monic polynomial over GF(p): returns
/// `(g, m)` pairs with `g` monic squarefree, pairwise coprime, and
/// `Π g^m` equal to the input. Handles vanishing derivatives by taking
/// p-th roots.
pub fn squarefree_decomposition(f: &GFPoly) -> Vec<(GFPoly, u32)> {
    assert!(f.is_monic(), "squarefree decomposition requires monic input");
    let p = f.modulus();
    let mut result: Vec<(GFPoly, u32)> = Vec::new();
    let mut f = f.clone();
    let mut power = 1u32;
    loop {
        if f.deg() == 0 {
            break;
        }
        let df = f.derivative();
        if df.is_zero() {
            f = pth_root(&f);
            power *= p as u32;
            continue;
        }
        let mut c = f.gcd(&df);
        let mut w = f.div_rem(&c).0;
        let mut i = 1u32;
        while w.deg() > 0 {
            let y = w.gcd(&c);
            let z = w.div_rem(&y).0;
            if z.deg() > 0 {
                result.push((z, i * power));
            }
            w = y;
            c = c.div_rem(&w).0;
            i += 1;
        }
        if c.deg() > 0 {
            // all remaining exponents are multiples of p
            f = c;
        } else {
            break;
        }
    }
    result
}

/// A polynomial with zero derivative is `g(t^p) = g(t)^p` over GF(p).
fn pth_root(f: &GFPoly) -> GFPoly {
    let p = f.modulus() as usize;
    let coeffs: Vec<u64> = f.coeffs().iter().step_by(p).copied().collect();
    GFPoly::from_reduced(f.modulus(), coeffs)
}

/// Complete factorization over GF(p): `lc * Π factor^multiplicity`
/// with monic irreducible factors in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfFactorization {
    pub lc: u64,
    pub factors: Vec<(GFPoly, u32)>,
}

impl GfFactorization {
    pub fn expand(&self, p: u64) -> GFPoly {
        let mut acc = GFPoly::constant(p, self.lc);
        for (g, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(g);
            }
        }
        acc
    }
}

/// Factor an arbitrary nonzero polynomial over GF(p) completely.
pub fn factor(f: &GFPoly, seed: u64) -> GfFactorization {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let lc = f.leading_coeff();
    let monic = f.make_monic();
    let mut factors: Vec<(GFPoly, u32)> = Vec::new();
    if monic.deg() > 0 {
        for (sf_part, mult) in squarefree_decomposition(&monic) {
            let parts = ddf(&sf_part).expect("squarefree decomposition output");
            for (part, d) in parts {
                for irr in edf(&part, d, seed) {
                    factors.push((irr, mult));
                }
            }
        }
    }
    factors.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
    GfFactorization { lc, factors }
}

/// The degree pattern of `f mod p`, or the reason the prime gives none.
///
/// Deterministic: the pattern needs only distinct-degree splitting (each part
/// of degree `k·d` contributes `k` entries of `d`).
pub fn degree_pattern(f: &UniPoly, p: u64) -> Result<Result<DegreePattern, SkipReason>, GfpError> {
    assert!(!f.is_zero(), "degree pattern of the zero polynomial");
    let reduced = reduce_mod_p(f, p)?;
    if reduced.degree() != f.degree() {
        return Ok(Err(SkipReason::LeadingCoeffVanishes));
    }
    if reduced.deg() == 0 {
        return Ok(Ok(DegreePattern::new(vec![])));
    }
    let monic = reduced.make_monic();
    if !monic.is_squarefree() {
        return Ok(Err(SkipReason::NotSquarefree));
    }
    let mut degrees = Vec::new();
    for (part, d) in ddf(&monic).expect("squarefree checked above") {
        let count = part.deg() / d;
        degrees.extend(std::iter::repeat_n(d, count));
    }
    Ok(Ok(DegreePattern::new(degrees)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, coeffs: &[u64]) -> GFPoly {
        GFPoly::new(p, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn ddf_splits_by_degree() {
        // (t+1)(t+2)(t^2+1) mod 3
        let f = gf(3, &[1, 1]).mul(&gf(3, &[2, 1])).mul(&gf(3, &[1, 0, 1]));
        let parts = ddf(&f).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (gf(3, &[2, 0, 1]), 1)); // (t+1)(t+2) = t^2+3t+2 = t^2+2
        assert_eq!(parts[1], (gf(3, &[1, 0, 1]), 2));
    }

    #[test]
    fn ddf_all_linear() {
        // t^2+1 = (t+2)(t+3) mod 5
        let parts = ddf(&gf(5, &[1, 0, 1])).unwrap();
        assert_eq!(parts, vec![(gf(5, &[1, 0, 1]), 1)]);
    }

    #[test]
    fn ddf_irreducible_quadratic() {
        let parts = ddf(&gf(3, &[1, 0, 1])).unwrap();
        assert_eq!(parts, vec![(gf(3, &[1, 0, 1]), 2)]);
    }

    #[test]
    fn ddf_rejects_repeated_factors() {
        let f = gf(5, &[1, 2, 1]); // (t+1)^2
        assert_eq!(ddf(&f), Err(GfpError::NotSquarefree));
    }

    #[test]
    fn edf_examples() {
        // (t+1)(t+2) mod 3 with d=1
        let out = edf(&gf(3, &[2, 0, 1]), 1, DEFAULT_SEED);
        assert_eq!(out, vec![gf(3, &[1, 1]), gf(3, &[2, 1])]);

        // already irreducible
        let out = edf(&gf(3, &[1, 0, 1]), 2, DEFAULT_SEED);
        assert_eq!(out, vec![gf(3, &[1, 0, 1])]);

        // (t^2+1)(t^2+t+2) mod 3 with d=2
        let part = gf(3, &[1, 0, 1]).mul(&gf(3, &[2, 1, 1]));
        let out = edf(&part, 2, DEFAULT_SEED);
        assert_eq!(out, vec![gf(3, &[1, 0, 1]), gf(3, &[2, 1, 1])]);
    }

    #[test]
    fn edf_seed_does_not_change_output() {
        let part = gf(7, &[1, 0, 1]).mul(&gf(7, &[3, 1, 1])).make_monic();
        let a = edf(&part, 2, 1);
        let b = edf(&part, 2, 999);
        assert_eq!(a, b);
    }

    #[test]
    fn edf_over_gf2() {
        // (t^2+t+1)(t^2... ) only one irreducible quadratic over GF(2);
        // use the two irreducible cubics t^3+t+1 and t^3+t^2+1.
        let f = gf(2, &[1, 1, 0, 1]).mul(&gf(2, &[1, 0, 1, 1]));
        let out = edf(&f, 3, DEFAULT_SEED);
        assert_eq!(out, vec![gf(2, &[1, 1, 0, 1]), gf(2, &[1, 0, 1, 1])]);
    }

    #[test]
    fn squarefree_decomposition_mixed() {
        // (t+1)^2 (t+2)^5 over GF(5)
        let mut f = GFPoly::one(5);
        for _ in 0..2 {
            f = f.mul(&gf(5, &[1, 1]));
        }
        for _ in 0..5 {
            f = f.mul(&gf(5, &[2, 1]));
        }
        let decomp = squarefree_decomposition(&f);
        assert_eq!(decomp, vec![(gf(5, &[1, 1]), 2), (gf(5, &[2, 1]), 5)]);
    }

    #[test]
    fn factor_reconstructs() {
        let f = gf(3, &[1, 2, 0, 1, 1, 2]);
        let fact = factor(&f, DEFAULT_SEED);
        assert_eq!(fact.expand(3), f);
    }

    #[test]
    fn degree_pattern_examples() {
        let f = UniPoly::from_i64(&[1, 0, 1]); // t^2 + 1
        assert_eq!(
            degree_pattern(&f, 5).unwrap(),
            Ok(DegreePattern::new(vec![1, 1]))
        );
        assert_eq!(
            degree_pattern(&f, 3).unwrap(),
            Ok(DegreePattern::new(vec![2]))
        );

        // repeated factors reduce non-squarefree at every prime
        let g = UniPoly::from_i64(&[1, 2, 1]); // (t+1)^2
        assert_eq!(degree_pattern(&g, 5).unwrap(), Err(SkipReason::NotSquarefree));

        // degree drop
        let h = UniPoly::from_i64(&[1, 1, 5]);
        assert_eq!(
            degree_pattern(&h, 5).unwrap(),
            Err(SkipReason::LeadingCoeffVanishes)
        );
    }

    #[test]
    fn reduction_of_repeated_factor_family() {
        // the (1,1,1) family polynomial reduces mod 2 to (t+1)^12, i.e.
        // t^12 + t^8 + t^4 + 1, so every pattern request at p=2 is skipped
        let f = crate::cuboidpoly::cuboid_poly(
            &crate::cuboidpoly::ParamTriple::from_u64(1, 1, 1).unwrap(),
        );
        let reduced = reduce_mod_p(&f, 2).unwrap();
        let mut linear_pow = GFPoly::one(2);
        for _ in 0..12 {
            linear_pow = linear_pow.mul(&gf(2, &[1, 1]));
        }
        assert_eq!(reduced, linear_pow);
        assert_eq!(reduced.coeffs(), &[1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(degree_pattern(&f, 2).unwrap(), Err(SkipReason::NotSquarefree));
    }

    #[test]
    fn subset_sums_of_pattern() {
        let pat = DegreePattern::new(vec![1, 1, 3]);
        let sums: Vec<usize> = pat.subset_sums().into_iter().collect();
        assert_eq!(sums, vec![0, 1, 2, 3, 4, 5]);
        let pat = DegreePattern::new(vec![5]);
        let sums: Vec<usize> = pat.subset_sums().into_iter().collect();
        assert_eq!(sums, vec![0, 5]);
    }
}
