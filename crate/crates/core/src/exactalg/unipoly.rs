use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};

use super::{ExactAlgError, Integer, Rational};

/// Dense univariate polynomial over ℤ in the variable `t`.
///
/// `coeffs[i]` is the coefficient of `t^i`; trailing zeros are trimmed, so
/// the zero polynomial is the empty vector and the leading coefficient of a
/// nonzero polynomial is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Integer>,
}

impl UniPoly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Integer::one())
    }

    pub fn constant(c: Integer) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c * t^deg`.
    pub fn monomial(c: Integer, deg: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly::new(coeffs)
    }

    /// The variable `t` itself.
    pub fn var() -> Self {
        UniPoly::monomial(Integer::one(), 1)
    }

    /// Convenience constructor from machine integers, ascending.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Integer {
        self.coeffs.get(i).cloned().unwrap_or_else(Integer::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    ///
    /// Panics on the zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Largest absolute value among the coefficients (zero for the zero polynomial).
    pub fn max_abs_coeff(&self) -> Integer {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Integer::zero)
    }

    /// Exact evaluation at a rational point by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    /// Exact evaluation at an integer point by Horner's rule.
    pub fn eval_integer(&self, x: &Integer) -> Integer {
        let mut acc = Integer::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Integer::from(i))
                .collect(),
        )
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Integer) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Integer::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / g` in ℤ[t].
    ///
    /// Fails with [`ExactAlgError::NotDivisible`] when the remainder is
    /// nonzero or a quotient coefficient would be fractional. Panics if `g`
    /// is the zero polynomial.
    pub fn divexact(&self, g: &UniPoly) -> Result<UniPoly, ExactAlgError> {
        assert!(!g.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(UniPoly::zero());
        }
        let (fd, gd) = (self.deg(), g.deg());
        if fd < gd {
            return Err(ExactAlgError::NotDivisible);
        }
        let glc = g.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Integer::zero(); fd - gd + 1];
        for i in (gd..=fd).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(glc);
            if !r.is_zero() {
                return Err(ExactAlgError::NotDivisible);
            }
            for (j, gc) in g.coeffs.iter().enumerate() {
                let idx = i - gd + j;
                let delta = &q * gc;
                rem[idx] -= delta;
            }
            quot[i - gd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ExactAlgError::NotDivisible);
        }
        Ok(UniPoly::new(quot))
    }

    /// Pseudo-division: returns `(q, r)` with
    /// `lc(g)^(deg f - deg g + 1) * f = q*g + r` and `deg r < deg g`.
    ///
    /// Requires `g` nonzero and `deg f >= deg g`.
    pub fn pseudo_div_rem(&self, g: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!g.is_zero(), "pseudo-division by the zero polynomial");
        let gd = g.deg();
        let d = g.leading_coeff().unwrap().clone();
        let e = self.deg() + 1 - gd;
        let mut q = UniPoly::zero();
        let mut r = self.clone();
        let mut steps = 0usize;
        while !r.is_zero() && r.deg() >= gd {
            let lead = r.leading_coeff().unwrap().clone();
            let shift = r.deg() - gd;
            q = q.scale(&d) + UniPoly::monomial(lead.clone(), shift);
            r = r.scale(&d) - g.shift_up(shift).scale(&lead);
            steps += 1;
        }
        // Normalize so the multiplier is exactly lc(g)^e regardless of how
        // many reduction steps actually ran.
        for _ in steps..e {
            q = q.scale(&d);
            r = r.scale(&d);
        }
        (q, r)
    }

    /// Signed content and primitive part: `content * primitive = self`,
    /// where the content carries the sign of the leading coefficient so the
    /// primitive part always has a positive leading coefficient.
    pub fn content_primitive(&self) -> Result<(Integer, UniPoly), ExactAlgError> {
        if self.is_zero() {
            return Err(ExactAlgError::ZeroPolynomial);
        }
        let mut c = Integer::zero();
        for a in &self.coeffs {
            c = c.gcd(a);
        }
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        let prim = UniPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        };
        Ok((c, prim))
    }

    /// Signed content (sign of the leading coefficient).
    pub fn content(&self) -> Result<Integer, ExactAlgError> {
        self.content_primitive().map(|(c, _)| c)
    }

    /// Primitive part with positive leading coefficient (zero for zero).
    pub fn primitive_part(&self) -> UniPoly {
        match self.content_primitive() {
            Ok((_, p)) => p,
            Err(_) => UniPoly::zero(),
        }
    }

    pub fn is_primitive(&self) -> bool {
        self.content().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Primitive greatest common divisor with positive leading coefficient,
    /// computed with the subresultant polynomial remainder sequence.
    ///
    /// Panics when both inputs are zero.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        if b.deg() == 0 {
            // Primitive nonzero constant is 1.
            return UniPoly::one();
        }
        // Subresultant PRS (Knuth 4.6.1, Algorithm C): all scalar divisions
        // below are exact.
        let mut g = Integer::one();
        let mut h = Integer::one();
        loop {
            let delta = a.deg() - b.deg();
            let (_, r) = a.pseudo_div_rem(&b);
            if r.is_zero() {
                return b.primitive_part();
            }
            if r.deg() == 0 {
                return UniPoly::one();
            }
            a = b;
            let divisor = &g * pow_int(&h, delta);
            b = r.exact_scalar_div(&divisor);
            g = a.leading_coeff().unwrap().clone();
            h = match delta {
                0 => h,
                1 => g.clone(),
                _ => exact_int_div(&pow_int(&g, delta), &pow_int(&h, delta - 1)),
            };
        }
    }

    /// Divide every coefficient by `s`, which must divide them all.
    fn exact_scalar_div(&self, s: &Integer) -> UniPoly {
        assert!(!s.is_zero());
        UniPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(s);
                    assert!(r.is_zero(), "inexact scalar division in PRS");
                    q
                })
                .collect(),
        }
    }

    /// Canonical total order: by degree, then coefficients from the leading
    /// term down. Used to keep factor lists in a deterministic order.
    pub fn canonical_cmp(&self, other: &UniPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

fn pow_int(base: &Integer, e: usize) -> Integer {
    let mut acc = Integer::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

fn exact_int_div(a: &Integer, b: &Integer) -> Integer {
    let (q, r) = a.div_rem(b);
    assert!(r.is_zero(), "inexact integer division in PRS");
    q
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(Integer::zero);
            if let Some(b) = rhs.coeffs.get(i) {
                c += b;
            }
            coeffs.push(c);
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        // Schoolbook convolution; degrees stay small in this crate.
        let mut coeffs = vec![Integer::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: &UniPoly) -> UniPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn mul_difference_of_squares() {
        let f = p(&[1, 1]); // t + 1
        let g = p(&[-1, 1]); // t - 1
        assert_eq!(&f * &g, p(&[-1, 0, 1]));
    }

    #[test]
    fn mul_degree_adds() {
        let f = p(&[1, -2, 0, 3]);
        let g = p(&[5, 0, 7]);
        assert_eq!((&f * &g).deg(), f.deg() + g.deg());
    }

    #[test]
    fn divexact_linear_factor() {
        let f = p(&[-1, 0, 1]); // t^2 - 1
        let g = p(&[-1, 1]); // t - 1
        assert_eq!(f.divexact(&g).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn divexact_rejects_nonzero_remainder() {
        let f = p(&[1, 0, 1]); // t^2 + 1
        let g = p(&[-1, 1]); // t - 1
        assert_eq!(f.divexact(&g), Err(ExactAlgError::NotDivisible));
    }

    #[test]
    fn divexact_rejects_fractional_quotient() {
        let f = p(&[0, 1]); // t
        let g = p(&[0, 2]); // 2t
        assert_eq!(f.divexact(&g), Err(ExactAlgError::NotDivisible));
    }

    #[test]
    fn eval_points() {
        let f = p(&[1, 0, 1]); // t^2 + 1
        let two = Rational::from_integer(2.into());
        assert_eq!(f.eval(&two), Rational::from_integer(5.into()));
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(f.eval(&half), Rational::new(5.into(), 4.into()));
    }

    #[test]
    fn content_primitive_examples() {
        let (c, prim) = p(&[9, 0, 6]).content_primitive().unwrap(); // 6t^2 + 9
        assert_eq!(c, Integer::from(3));
        assert_eq!(prim, p(&[3, 0, 2]));

        let (c, prim) = p(&[4, -2]).content_primitive().unwrap(); // -2t + 4
        assert_eq!(c, Integer::from(-2));
        assert_eq!(prim, p(&[-2, 1]));

        assert_eq!(
            UniPoly::zero().content_primitive(),
            Err(ExactAlgError::ZeroPolynomial)
        );
    }

    #[test]
    fn gcd_shared_linear_factor() {
        let f = &p(&[-1, 1]) * &p(&[1, 1]); // (t-1)(t+1)
        let g = &p(&[1, 1]) * &p(&[1, 1]); // (t+1)^2
        assert_eq!(f.gcd(&g), p(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        let f = p(&[1, 0, 1]);
        let g = p(&[-1, 0, 1]);
        assert_eq!(f.gcd(&g), UniPoly::one());
    }

    #[test]
    fn gcd_ignores_content() {
        let f = p(&[2, 2]); // 2(t+1)
        let g = p(&[-3, 0, 3]); // 3(t-1)(t+1)
        assert_eq!(f.gcd(&g), p(&[1, 1]));
    }

    #[test]
    fn gcd_high_multiplicity() {
        // (t-1)^3 (t+2)^2 vs its derivative: gcd = (t-1)^2 (t+2)
        let f = p(&[-1, 1]).pow(3) * p(&[2, 1]).pow(2);
        let g = f.derivative();
        let expected = p(&[-1, 1]).pow(2) * p(&[2, 1]);
        assert_eq!(f.gcd(&g), expected);
    }

    #[test]
    fn pseudo_div_rem_identity() {
        let f = p(&[3, -2, 0, 5, 1]);
        let g = p(&[1, 0, 2]);
        let (q, r) = f.pseudo_div_rem(&g);
        let e = f.deg() + 1 - g.deg();
        let lhs = f.scale(&pow_int(g.leading_coeff().unwrap(), e));
        assert_eq!(lhs, &(&q * &g) + &r);
        assert!(r.is_zero() || r.deg() < g.deg());
    }

    #[test]
    fn display_formatting() {
        assert_eq!(p(&[1, 2, -1]).to_string(), "-t^2 + 2*t + 1");
        assert_eq!(p(&[0, 0, 0]).to_string(), "0");
        assert_eq!(p(&[-4]).to_string(), "-4");
    }
}
