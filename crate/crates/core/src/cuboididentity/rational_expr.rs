use super::multipoly::MultiPoly;
use crate::exactalg::{Integer, Rational};

/// Quotient of two multivariate polynomials. No gcd normalization is ever
/// performed; equality and zero tests go through cross-multiplication.
#[derive(Debug, Clone)]
pub struct RationalExpr {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalExpr {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RationalExpr { num, den }
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        RationalExpr::new(num, MultiPoly::one())
    }

    pub fn one() -> Self {
        RationalExpr::from_poly(MultiPoly::one())
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    /// Zero as a rational function (the numerator polynomial is zero).
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality by cross-multiplication.
    pub fn equals(&self, other: &RationalExpr) -> bool {
        (&self.num * &other.den) == (&other.num * &self.den)
    }

    pub fn add(&self, other: &RationalExpr) -> RationalExpr {
        if self.den == other.den {
            return RationalExpr::new(&self.num + &other.num, self.den.clone());
        }
        RationalExpr::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &RationalExpr) -> RationalExpr {
        if self.den == other.den {
            return RationalExpr::new(&self.num - &other.num, self.den.clone());
        }
        RationalExpr::new(
            &(&self.num * &other.den) - &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn mul(&self, other: &RationalExpr) -> RationalExpr {
        RationalExpr::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn square(&self) -> RationalExpr {
        self.mul(self)
    }

    /// Exact value at a point where the denominator does not vanish.
    pub fn eval(&self, point: &[Rational; super::multipoly::NVARS]) -> Rational {
        self.num.eval(point) / self.den.eval(point)
    }

    /// Replace variable `i` by `num/den` in both numerator and denominator.
    pub fn substitute(&self, i: usize, num: &MultiPoly, den: &MultiPoly) -> RationalExpr {
        let (ns, a) = self.num.substitute(i, num, den);
        let (ds, b) = self.den.substitute(i, num, den);
        // self = (ns / den^a) / (ds / den^b)
        if a >= b {
            RationalExpr::new(ns, &ds * &den.pow((a - b) as u32))
        } else {
            RationalExpr::new(&ns * &den.pow((b - a) as u32), ds)
        }
    }
}

impl std::fmt::Display for RationalExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Convenience: the constant rational expression `c`.
pub(crate) fn constant(c: i64) -> RationalExpr {
    RationalExpr::from_poly(MultiPoly::constant(Integer::from(c)))
}

#[cfg(test)]
mod tests {
    use super::super::multipoly::{ALPHA, BETA};
    use super::*;

    #[test]
    fn cross_multiplied_equality() {
        // alpha/beta == 2alpha/2beta
        let a = RationalExpr::new(MultiPoly::var(ALPHA), MultiPoly::var(BETA));
        let b = RationalExpr::new(
            MultiPoly::var(ALPHA).scale(&Integer::from(2)),
            MultiPoly::var(BETA).scale(&Integer::from(2)),
        );
        assert!(a.equals(&b));
    }

    #[test]
    fn sub_self_is_zero() {
        let a = RationalExpr::new(
            &MultiPoly::var(ALPHA) + &MultiPoly::one(),
            MultiPoly::var(BETA),
        );
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn arithmetic_cross_check() {
        // alpha/beta + beta/alpha = (alpha^2 + beta^2) / (alpha*beta)
        let a = RationalExpr::new(MultiPoly::var(ALPHA), MultiPoly::var(BETA));
        let b = RationalExpr::new(MultiPoly::var(BETA), MultiPoly::var(ALPHA));
        let sum = a.add(&b);
        let expected = RationalExpr::new(
            MultiPoly::from_terms(&[(1, [2, 0, 0, 0]), (1, [0, 2, 0, 0])]),
            MultiPoly::from_terms(&[(1, [1, 1, 0, 0])]),
        );
        assert!(sum.equals(&expected));
    }
}
