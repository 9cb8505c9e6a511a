use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as IntegerOps;
use num_traits::ToPrimitive;

use super::primes::{is_prime, mul_mod, pow_mod};
use super::GfpError;
use crate::exactalg::UniPoly;

/// Dense univariate polynomial over GF(p) for a word-sized prime `p`.
///
/// Coefficients are reduced residues in `[0, p)`, ascending by degree, with
/// trailing zeros trimmed. The modulus is validated prime at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GFPoly {
    p: u64,
    coeffs: Vec<u64>,
}

/// Coefficient-wise reduction of an integer polynomial modulo `p`.
///
/// The degree drops when `p` divides the leading coefficient.
pub fn reduce_mod_p(f: &UniPoly, p: u64) -> Result<GFPoly, GfpError> {
    if !is_prime(p) {
        return Err(GfpError::CompositeModulus(p));
    }
    let modulus = BigInt::from(p);
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&modulus).to_u64().unwrap())
        .collect();
    Ok(GFPoly::from_reduced(p, coeffs))
}

impl GFPoly {
    /// Build from coefficients (any residues; reduced here), checking that
    /// the modulus is prime.
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self, GfpError> {
        if !is_prime(p) {
            return Err(GfpError::CompositeModulus(p));
        }
        Ok(GFPoly::from_reduced(
            p,
            coeffs.into_iter().map(|c| c % p).collect(),
        ))
    }

    /// Internal constructor for already-reduced coefficients.
    pub(crate) fn from_reduced(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        GFPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        GFPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        GFPoly::from_reduced(p, vec![1])
    }

    pub fn var(p: u64) -> Self {
        GFPoly::from_reduced(p, vec![0, 1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        GFPoly::from_reduced(p, vec![c % p])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero; panics on zero.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading_coeff(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    fn same_field(&self, other: &GFPoly) {
        assert_eq!(self.p, other.p, "mixed moduli in GF(p) arithmetic");
    }

    pub fn add(&self, other: &GFPoly) -> GFPoly {
        self.same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            coeffs.push((a + b) % self.p);
        }
        GFPoly::from_reduced(self.p, coeffs)
    }

    pub fn sub(&self, other: &GFPoly) -> GFPoly {
        self.same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            coeffs.push((a + self.p - b) % self.p);
        }
        GFPoly::from_reduced(self.p, coeffs)
    }

    pub fn mul(&self, other: &GFPoly) -> GFPoly {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return GFPoly::zero(self.p);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = (coeffs[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        GFPoly::from_reduced(self.p, coeffs)
    }

    pub fn mul_scalar(&self, c: u64) -> GFPoly {
        let c = c % self.p;
        GFPoly::from_reduced(
            self.p,
            self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        )
    }

    /// Division with remainder; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &GFPoly) -> (GFPoly, GFPoly) {
        self.same_field(divisor);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.deg() < divisor.deg() {
            return (GFPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let dd = divisor.deg();
        let inv_lead = inverse(divisor.leading_coeff(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.deg() - dd + 1];
        for i in (dd..rem.len()).rev() {
            if rem[i] == 0 {
                continue;
            }
            let q = mul_mod(rem[i], inv_lead, p);
            quot[i - dd] = q;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = (rem[idx] + p - mul_mod(q, dc, p)) % p;
            }
        }
        rem.truncate(dd);
        (
            GFPoly::from_reduced(p, quot),
            GFPoly::from_reduced(p, rem),
        )
    }

    pub fn rem(&self, divisor: &GFPoly) -> GFPoly {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (Euclid); `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, other: &GFPoly) -> GFPoly {
        self.same_field(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn make_monic(&self) -> GFPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_scalar(inverse(self.leading_coeff(), self.p))
    }

    pub fn derivative(&self) -> GFPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64) % self.p, self.p))
            .collect();
        GFPoly::from_reduced(self.p, coeffs)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod(acc, x, self.p) + c) % self.p;
        }
        acc
    }

    /// `self^exp mod modulus` by square-and-multiply; the exponent may exceed
    /// word size (equal-degree splitting raises to `(p^d - 1) / 2`).
    pub fn pow_mod(&self, exp: &num_bigint::BigUint, modulus: &GFPoly) -> GFPoly {
        self.same_field(modulus);
        let mut acc = GFPoly::one(self.p);
        let mut base = self.rem(modulus);
        for i in 0..exp.bits() {
            if exp.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
        }
        acc
    }

    /// True iff `gcd(f, f')` is constant. A vanishing derivative of a
    /// nonconstant polynomial means a p-th power, hence not squarefree.
    pub fn is_squarefree(&self) -> bool {
        assert!(!self.is_zero(), "squarefree test on the zero polynomial");
        if self.deg() == 0 {
            return true;
        }
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        self.gcd(&d).deg() == 0
    }

    /// Canonical order (degree, then coefficients from the top) used for
    /// deterministic factor lists.
    pub fn canonical_cmp(&self, other: &GFPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

/// Inverse of `a` modulo prime `p` via Fermat.
fn inverse(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    pow_mod(a, p - 2, p)
}

impl fmt::Display for GFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{c}*t")?,
                (_, 1) => write!(f, "t^{i}")?,
                (_, _) => write!(f, "{c}*t^{i}")?,
            }
        }
        write!(f, " (mod {})", self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        // t^2 - 1 mod 3 -> t^2 + 2
        let f = UniPoly::from_i64(&[-1, 0, 1]);
        let g = reduce_mod_p(&f, 3).unwrap();
        assert_eq!(g.coeffs(), &[2, 0, 1]);

        // 3t^2 + 1 mod 3 -> 1 (degree drop)
        let f = UniPoly::from_i64(&[1, 0, 3]);
        let g = reduce_mod_p(&f, 3).unwrap();
        assert_eq!(g.coeffs(), &[1]);

        assert_eq!(
            reduce_mod_p(&f, 4),
            Err(GfpError::CompositeModulus(4))
        );
    }

    #[test]
    fn div_rem_roundtrip() {
        let p = 7;
        let f = GFPoly::new(p, vec![3, 1, 4, 1, 5]).unwrap();
        let g = GFPoly::new(p, vec![2, 0, 3]).unwrap();
        let (q, r) = f.div_rem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.is_zero() || r.deg() < g.deg());
    }

    #[test]
    fn squarefree_examples() {
        // t^2 + 1 mod 3 is irreducible, hence squarefree
        assert!(GFPoly::new(3, vec![1, 0, 1]).unwrap().is_squarefree());
        // (t+1)^2 mod 5
        assert!(!GFPoly::new(5, vec![1, 2, 1]).unwrap().is_squarefree());
        // t^4 + 1 mod 2 = (t+1)^4
        assert!(!GFPoly::new(2, vec![1, 0, 0, 0, 1]).unwrap().is_squarefree());
    }

    #[test]
    fn pow_mod_fermat() {
        // t^p ≡ t mod (t^p - t); check t^5 mod (t^2+1) over GF(5)
        let p = 5;
        let modulus = GFPoly::new(p, vec![1, 0, 1]).unwrap();
        let t = GFPoly::var(p);
        let r = t.pow_mod(&num_bigint::BigUint::from(5u64), &modulus);
        // t^2 = -1, t^4 = 1, t^5 = t
        assert_eq!(r, t);
    }
}
