//! The constraint polynomial, the six cuboid quantities, and the identity
//! verification pipeline.

use std::fmt;

use super::multipoly::{MultiPoly, ALPHA, BETA, UPSILON, Z};
use super::rational_expr::{constant, RationalExpr};

/// The degree-12 constraint polynomial `E` in (alpha, beta, upsilon): the
/// rational form of the cuboid equation, grouped exactly as the equation is
/// written out (the groups collect terms of equal total degree).
pub fn constraint_poly() -> MultiPoly {
    #[rustfmt::skip]
    let terms: [(i64, [u16; 4]); 27] = [
        // degree 12
        (1, [4, 4, 4, 0]),
        // degree 10
        (6, [4, 4, 2, 0]), (-2, [4, 2, 4, 0]), (-2, [2, 4, 4, 0]),
        // degree 8
        (4, [2, 4, 2, 0]), (4, [4, 2, 2, 0]), (-12, [2, 2, 4, 0]),
        (1, [4, 0, 4, 0]), (1, [0, 4, 4, 0]), (1, [4, 4, 0, 0]),
        // degree 6
        (6, [4, 0, 2, 0]), (6, [0, 4, 2, 0]), (-8, [2, 2, 2, 0]),
        (-2, [2, 0, 4, 0]), (-2, [0, 2, 4, 0]), (-2, [4, 2, 0, 0]), (-2, [2, 4, 0, 0]),
        // degree 4
        (1, [0, 0, 4, 0]), (1, [0, 4, 0, 0]), (1, [4, 0, 0, 0]),
        (4, [2, 0, 2, 0]), (4, [0, 2, 2, 0]), (-12, [2, 2, 0, 0]),
        // degree 2
        (6, [0, 0, 2, 0]), (-2, [2, 0, 0, 0]), (-2, [0, 2, 0, 0]),
        // constant
        (1, [0, 0, 0, 0]),
    ];
    MultiPoly::from_terms(&terms)
}

/// Numerator and denominator of the auxiliary parameter:
/// `z = (1+υ²)(1−β²)(1+α²) / (2(1+β²)(1−α²υ²))`.
pub fn z_substitution() -> (MultiPoly, MultiPoly) {
    let one = MultiPoly::one();
    let a2 = MultiPoly::var(ALPHA).pow(2);
    let b2 = MultiPoly::var(BETA).pow(2);
    let u2 = MultiPoly::var(UPSILON).pow(2);
    let num = &(&(&one + &u2) * &(&one - &b2)) * &(&one + &a2);
    let den = (&(&one + &b2) * &(&one - &(&a2 * &u2))).scale(&2.into());
    (num, den)
}

/// The edges `x1, x2, x3` and face diagonals `d1, d2, d3` of a rational
/// cuboid with unit space diagonal, as rational expressions in
/// (alpha, beta, upsilon, z).
#[derive(Debug, Clone)]
pub struct CuboidQuantities {
    pub x1: RationalExpr,
    pub x2: RationalExpr,
    pub x3: RationalExpr,
    pub d1: RationalExpr,
    pub d2: RationalExpr,
    pub d3: RationalExpr,
}

pub fn cuboid_quantities() -> CuboidQuantities {
    let one = MultiPoly::one();
    let alpha = MultiPoly::var(ALPHA);
    let beta = MultiPoly::var(BETA);
    let upsilon = MultiPoly::var(UPSILON);
    let z = MultiPoly::var(Z);

    let u2 = upsilon.pow(2);
    let z2 = z.pow(2);
    let one_plus_u2 = &one + &u2;
    let one_minus_u2 = &one - &u2;
    let one_plus_z2 = &one + &z2;
    let shared_den = &one_plus_u2 * &one_plus_z2;

    // x1 = 2υ / (1+υ²),  d1 = (1−υ²) / (1+υ²)
    let x1 = RationalExpr::new(upsilon.scale(&2.into()), one_plus_u2.clone());
    let d1 = RationalExpr::new(one_minus_u2.clone(), one_plus_u2.clone());

    // x2 = 2z(1−υ²) / ((1+υ²)(1+z²))
    let x2 = RationalExpr::new(
        (&z * &one_minus_u2).scale(&2.into()),
        shared_den.clone(),
    );
    // x3 = (1−υ²)(1−z²) / ((1+υ²)(1+z²))
    let x3 = RationalExpr::new(&one_minus_u2 * &(&one - &z2), shared_den.clone());

    // d2 = ((1+υ²)(1+z²) + 2z(1−υ²)) / ((1+υ²)(1+z²)) · β
    let d2 = RationalExpr::new(
        &(&shared_den + &(&z * &one_minus_u2).scale(&2.into())) * &beta,
        shared_den.clone(),
    );
    // d3 = 2(υ²z² + 1) / ((1+υ²)(1+z²)) · α
    let d3 = RationalExpr::new(
        (&(&(&u2 * &z2) + &one) * &alpha).scale(&2.into()),
        shared_den,
    );

    CuboidQuantities {
        x1,
        x2,
        x3,
        d1,
        d2,
        d3,
    }
}

/// The six defining equalities of a unit-space-diagonal rational cuboid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CuboidEquality {
    /// `x1² + x2² = d3²`
    FaceDiag3,
    /// `x2² + x3² = d1²` — holds identically.
    FaceDiag1,
    /// `x3² + x1² = d2²`
    FaceDiag2,
    /// `x1² + d1² = 1` — holds identically.
    UnitDiag1,
    /// `x2² + d2² = 1`
    UnitDiag2,
    /// `x3² + d3² = 1`
    UnitDiag3,
}

impl CuboidEquality {
    pub const ALL: [CuboidEquality; 6] = [
        CuboidEquality::FaceDiag3,
        CuboidEquality::FaceDiag1,
        CuboidEquality::FaceDiag2,
        CuboidEquality::UnitDiag1,
        CuboidEquality::UnitDiag2,
        CuboidEquality::UnitDiag3,
    ];

    /// The two equalities that hold without invoking the constraint.
    pub fn holds_identically(&self) -> bool {
        matches!(self, CuboidEquality::FaceDiag1 | CuboidEquality::UnitDiag1)
    }

    pub fn name(&self) -> &'static str {
        match self {
            CuboidEquality::FaceDiag3 => "x1^2+x2^2=d3^2",
            CuboidEquality::FaceDiag1 => "x2^2+x3^2=d1^2",
            CuboidEquality::FaceDiag2 => "x3^2+x1^2=d2^2",
            CuboidEquality::UnitDiag1 => "x1^2+d1^2=1",
            CuboidEquality::UnitDiag2 => "x2^2+d2^2=1",
            CuboidEquality::UnitDiag3 => "x3^2+d3^2=1",
        }
    }
}

impl fmt::Display for CuboidEquality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl CuboidQuantities {
    /// `LHS − RHS` of an equality, as a rational expression still containing
    /// `z` where the quantities do.
    pub fn difference(&self, eq: CuboidEquality) -> RationalExpr {
        match eq {
            CuboidEquality::FaceDiag3 => self.x1.square().add(&self.x2.square()).sub(&self.d3.square()),
            CuboidEquality::FaceDiag1 => self.x2.square().add(&self.x3.square()).sub(&self.d1.square()),
            CuboidEquality::FaceDiag2 => self.x3.square().add(&self.x1.square()).sub(&self.d2.square()),
            CuboidEquality::UnitDiag1 => self.x1.square().add(&self.d1.square()).sub(&constant(1)),
            CuboidEquality::UnitDiag2 => self.x2.square().add(&self.d2.square()).sub(&constant(1)),
            CuboidEquality::UnitDiag3 => self.x3.square().add(&self.d3.square()).sub(&constant(1)),
        }
    }
}

/// Check one of the two unconditional equalities: the cross-multiplied
/// difference must be the zero polynomial (no substitution, no constraint).
pub fn verify_identical(eq: CuboidEquality) -> bool {
    assert!(eq.holds_identically(), "{eq} needs the constraint");
    cuboid_quantities().difference(eq).is_zero()
}

/// Result of reducing a cleared difference by the constraint polynomial.
#[derive(Debug, Clone)]
pub struct ModEOutcome {
    /// The difference with `z` substituted out and denominators cleared.
    pub cleared_numerator: MultiPoly,
    /// Exact quotient `cleared_numerator / E`, when divisible.
    pub quotient: Option<MultiPoly>,
}

impl ModEOutcome {
    pub fn ok(&self) -> bool {
        self.quotient.is_some()
    }

    /// Multiply the quotient back out and compare, term for term.
    pub fn reconstructs(&self) -> bool {
        match &self.quotient {
            Some(q) => (q * &constraint_poly()) == self.cleared_numerator,
            None => false,
        }
    }
}

/// Substitute `z` by its defining rational expression, clear denominators,
/// and divide the resulting numerator by the constraint polynomial.
pub fn reduce_by_constraint(diff: &RationalExpr) -> ModEOutcome {
    let (zn, zd) = z_substitution();
    let substituted = diff.substitute(Z, &zn, &zd);
    debug_assert_eq!(substituted.num().max_exponent(Z), 0);
    debug_assert_eq!(substituted.den().max_exponent(Z), 0);
    let cleared_numerator = substituted.num().clone();
    let quotient = cleared_numerator.divexact(&constraint_poly()).ok();
    ModEOutcome {
        cleared_numerator,
        quotient,
    }
}

/// Verify one of the four constraint-dependent equalities.
pub fn verify_mod_constraint(eq: CuboidEquality) -> ModEOutcome {
    assert!(!eq.holds_identically(), "{eq} holds without the constraint");
    reduce_by_constraint(&cuboid_quantities().difference(eq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Integer, Rational};
    use num_traits::One;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(Integer::from(n), Integer::from(d))
    }

    #[test]
    fn constraint_poly_shape() {
        let e = constraint_poly();
        assert_eq!(e.total_degree(), 12);
        assert_eq!(e.coeff(&super::super::Monomial([4, 4, 4, 0])), Integer::one());
        assert_eq!(e.coeff(&super::super::Monomial([0, 0, 0, 0])), Integer::one());
        assert_eq!(e.max_exponent(Z), 0);
    }

    #[test]
    fn tangent_half_angle_values() {
        // at υ = 1/2: x1 = 4/5, d1 = 3/5
        let q = cuboid_quantities();
        let point = [rat(0, 1), rat(0, 1), rat(1, 2), rat(0, 1)];
        assert_eq!(q.x1.eval(&point), rat(4, 5));
        assert_eq!(q.d1.eval(&point), rat(3, 5));
    }

    #[test]
    fn unconditional_identities() {
        assert!(verify_identical(CuboidEquality::UnitDiag1));
        assert!(verify_identical(CuboidEquality::FaceDiag1));
    }

    #[test]
    fn unit_diag2_holds_mod_constraint() {
        let outcome = verify_mod_constraint(CuboidEquality::UnitDiag2);
        assert!(outcome.ok());
        assert!(outcome.reconstructs());
    }

    #[test]
    fn perturbed_quantity_fails() {
        // replace d3's alpha factor by beta: the identity must break
        let mut q = cuboid_quantities();
        let one = MultiPoly::one();
        let u2 = MultiPoly::var(UPSILON).pow(2);
        let z2 = MultiPoly::var(Z).pow(2);
        let den = &(&one + &u2) * &(&one + &z2);
        q.d3 = RationalExpr::new(
            (&(&(&u2 * &z2) + &one) * &MultiPoly::var(BETA)).scale(&2.into()),
            den,
        );
        let outcome = reduce_by_constraint(&q.difference(CuboidEquality::UnitDiag3));
        assert!(!outcome.ok(), "perturbed identity must not divide");
    }
}
