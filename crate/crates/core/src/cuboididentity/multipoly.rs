use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};

use super::MultiPolyError;
use crate::exactalg::{Integer, Rational};

/// Number of variables; the slots are fixed as (alpha, beta, upsilon, z).
pub const NVARS: usize = 4;
pub const VARS: [&str; NVARS] = ["alpha", "beta", "upsilon", "z"];
pub const ALPHA: usize = 0;
pub const BETA: usize = 1;
pub const UPSILON: usize = 2;
pub const Z: usize = 3;

/// Exponent vector over (alpha, beta, upsilon, z), ordered graded
/// lexicographically: total degree first, then the exponent tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn constant() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0u16; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(&other.0) {
            *a += b;
        }
        Monomial(e)
    }

    /// Componentwise divisibility.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(&other.0) {
            *a -= b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over ℤ in (alpha, beta, upsilon, z).
/// No explicit zero coefficients; terms kept in graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Integer>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::constant(), c);
        }
        MultiPoly { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(i), Integer::one());
        MultiPoly { terms }
    }

    /// Build from `(coefficient, exponents)` pairs; repeated monomials are
    /// accumulated.
    pub fn from_terms(terms: &[(i64, [u16; NVARS])]) -> Self {
        let mut out = MultiPoly::zero();
        for &(c, exps) in terms {
            out.add_term(Monomial(exps), Integer::from(c));
        }
        out
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Integer) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(Integer::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::constant())
                .is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Integer)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Integer {
        self.terms.get(mono).cloned().unwrap_or_else(Integer::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// Largest exponent of variable `i` across all terms.
    pub fn max_exponent(&self, i: usize) -> u16 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Integer)> {
        self.terms.iter().next_back()
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &Integer) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a * c))
                .collect(),
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rational; NVARS]) -> Rational {
        let mut acc = Rational::zero();
        for (mono, coeff) in &self.terms {
            let mut term = Rational::from_integer(coeff.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Exact quotient `self / g`; fails when `g` does not divide `self`.
    ///
    /// Greedy leading-term elimination: for a single divisor this decides
    /// divisibility exactly, because the leading term of any multiple of `g`
    /// is a term-multiple of `g`'s leading term.
    pub fn divexact(&self, g: &MultiPoly) -> Result<MultiPoly, MultiPolyError> {
        assert!(!g.is_zero(), "division by the zero polynomial");
        let (g_mono, g_coeff) = g.leading_term().unwrap();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((r_mono, r_coeff)) = rem.leading_term() {
            if !g_mono.divides(r_mono) {
                return Err(MultiPolyError::NotDivisible);
            }
            let (q, carry) = r_coeff.div_rem(g_coeff);
            if !carry.is_zero() {
                return Err(MultiPolyError::NotDivisible);
            }
            let q_mono = r_mono.div(g_mono);
            let mut t = MultiPoly::zero();
            t.add_term(q_mono, q.clone());
            rem = &rem - &(&t * g);
            quot.add_term(q_mono, q);
        }
        Ok(quot)
    }

    /// Replace variable `i` by the rational expression `num/den`: returns
    /// `(g, d)` with `self(..., x_i = num/den, ...) = g / den^d`, where `d`
    /// is the largest exponent of `x_i` in `self`.
    pub fn substitute(&self, i: usize, num: &MultiPoly, den: &MultiPoly) -> (MultiPoly, u16) {
        let d = self.max_exponent(i);
        if d == 0 {
            return (self.clone(), 0);
        }
        // precompute num^e * den^(d-e)
        let mut num_pows = vec![MultiPoly::one()];
        let mut den_pows = vec![MultiPoly::one()];
        for e in 1..=d as usize {
            num_pows.push(&num_pows[e - 1] * num);
            den_pows.push(&den_pows[e - 1] * den);
        }
        let mut out = MultiPoly::zero();
        for (mono, coeff) in &self.terms {
            let e = mono.0[i] as usize;
            let mut rest = *mono;
            rest.0[i] = 0;
            let mut base = MultiPoly::zero();
            base.add_term(rest, coeff.clone());
            let scaled = &(&base * &num_pows[e]) * &den_pows[d as usize - e];
            out = &out + &scaled;
        }
        (out, d)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, coeff) in self.terms.iter().rev() {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = mono.total_degree() == 0;
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
            }
            let mut wrote_var = false;
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_var || !mag.is_one() {
                    write!(f, "*")?;
                }
                wrote_var = true;
                if e == 1 {
                    write!(f, "{}", VARS[i])?;
                } else {
                    write!(f, "{}^{e}", VARS[i])?;
                }
            }
            let _ = wrote_var;
        }
        Ok(())
    }
}
