//! The cuboid polynomial families and their special-case structure.
//!
//! For positive integer parameters `(a, b, u)` the degree-12 monic polynomial
//! built by [`cuboid_poly`] encodes solutions of the cuboid equation: a
//! perfect cuboid exists iff for some coprime triple it has a rational root
//! `t` with `t > a`, `t > b`, `t > u` and `(a+t)(b+t) > 2t²`.
//!
//! Certain parameter shapes make the polynomial reducible in closed form.
//! [`classify_case`] assigns every normalized triple exactly one [`CaseTag`],
//! and [`expected_factorization`] produces the corresponding closed-form
//! factor list, leaving the conjecturally irreducible cofactors
//! ([`octic_cofactor`], [`decic_cofactor`]) unexpanded.

use std::fmt;

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed};

use crate::exactalg::{FactorList, Integer, UniPoly};

/// Errors from parameter handling.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CuboidPolyError {
    #[error("parameters must be positive integers")]
    NonPositiveInput,
    #[error("triple is not one of the special cases")]
    NotSpecialCase,
}

/// A triple of positive integer parameters `(a, b, u)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamTriple {
    a: Integer,
    b: Integer,
    u: Integer,
}

impl ParamTriple {
    /// Build a triple, requiring `a, b, u >= 1`.
    pub fn new(a: Integer, b: Integer, u: Integer) -> Result<Self, CuboidPolyError> {
        if !a.is_positive() || !b.is_positive() || !u.is_positive() {
            return Err(CuboidPolyError::NonPositiveInput);
        }
        Ok(ParamTriple { a, b, u })
    }

    /// Convenience constructor from machine integers.
    pub fn from_u64(a: u64, b: u64, u: u64) -> Result<Self, CuboidPolyError> {
        ParamTriple::new(a.into(), b.into(), u.into())
    }

    pub fn a(&self) -> &Integer {
        &self.a
    }

    pub fn b(&self) -> &Integer {
        &self.b
    }

    pub fn u(&self) -> &Integer {
        &self.u
    }

    /// `gcd(a, b, u) == 1`.
    pub fn is_normalized(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.u).is_one()
    }
}

impl fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={}, u={})", self.a, self.b, self.u)
    }
}

/// Divide out `gcd(a, b, u)` so the returned triple is coprime.
pub fn normalize_params(
    a: Integer,
    b: Integer,
    u: Integer,
) -> Result<ParamTriple, CuboidPolyError> {
    let t = ParamTriple::new(a, b, u)?;
    let m = t.a.gcd(&t.b).gcd(&t.u);
    ParamTriple::new(&t.a / &m, &t.b / &m, &t.u / &m)
}

/// Which special parameter shape a normalized triple falls under.
///
/// Overlaps are resolved by priority: `AllEqual` first (it satisfies several
/// shapes at once), then the pairwise equalities, then the two square
/// conditions, then `General`. The square cases carry the `(p, q)`
/// decomposition `a=pq, b=p², u=q²` (resp. with `a` and `b` swapped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseTag {
    /// `a = b = u` (normalized: the triple `(1,1,1)`).
    AllEqual,
    /// `a = b`, `a ≠ u`.
    AEqualsB,
    /// `a = u`, not all equal.
    AEqualsU,
    /// `b = u`, not all equal.
    BEqualsU,
    /// `b·u = a²` with `a = pq`, `b = p²`, `u = q²`, `gcd(p,q) = 1`.
    BuEqualsASquared { p: Integer, q: Integer },
    /// `a·u = b²` with `a = p²`, `b = pq`, `u = q²`, `gcd(p,q) = 1`.
    AuEqualsBSquared { p: Integer, q: Integer },
    /// None of the special shapes.
    General,
}

impl CaseTag {
    /// Stable machine-readable name.
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::AllEqual => "all_equal",
            CaseTag::AEqualsB => "a_eq_b",
            CaseTag::AEqualsU => "a_eq_u",
            CaseTag::BEqualsU => "b_eq_u",
            CaseTag::BuEqualsASquared { .. } => "bu_eq_a2",
            CaseTag::AuEqualsBSquared { .. } => "au_eq_b2",
            CaseTag::General => "general",
        }
    }

    pub fn is_general(&self) -> bool {
        matches!(self, CaseTag::General)
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::BuEqualsASquared { p, q } | CaseTag::AuEqualsBSquared { p, q } => {
                write!(f, "{}(p={},q={})", self.name(), p, q)
            }
            _ => f.write_str(self.name()),
        }
    }
}

fn sq(x: &Integer) -> Integer {
    x * x
}

/// The degree-12 monic cuboid polynomial for `(a, b, u)`.
///
/// Only even powers of `t` appear; the constant term is `u⁴a⁴b⁴`. The
/// construction is symmetric in `a` and `b`.
pub fn cuboid_poly(params: &ParamTriple) -> UniPoly {
    let (a2, b2, u2) = (sq(params.a()), sq(params.b()), sq(params.u()));
    let (a4, b4, u4) = (sq(&a2), sq(&b2), sq(&u2));

    let c12 = Integer::one();
    let c10 = 6 * &u2 - 2 * &a2 - 2 * &b2;
    let c8 = &u4 + &b4 + &a4 + 4 * &a2 * &u2 + 4 * &b2 * &u2 - 12 * &b2 * &a2;
    let c6 = 6 * &a4 * &u2 + 6 * &u2 * &b4 - 8 * &a2 * &b2 * &u2
        - 2 * &u4 * &a2
        - 2 * &u4 * &b2
        - 2 * &a4 * &b2
        - 2 * &b4 * &a2;
    let c4 = 4 * &u2 * &b4 * &a2 + 4 * &a4 * &u2 * &b2 - 12 * &u4 * &a2 * &b2
        + &u4 * &a4
        + &u4 * &b4
        + &a4 * &b4;
    let c2 = 6 * &a4 * &u2 * &b4 - 2 * &u4 * &a4 * &b2 - 2 * &u4 * &a2 * &b4;
    let c0 = &u4 * &a4 * &b4;

    even_poly(&[c0, c2, c4, c6, c8, c10, c12])
}

/// The degree-8 monic cofactor for the `a = b` case:
/// `cuboid_poly(a, a, u) = (t² + a²)² · octic_cofactor(a, u)`.
pub fn octic_cofactor(a: &Integer, u: &Integer) -> UniPoly {
    let (a2, u2) = (sq(a), sq(u));
    let (a4, u4) = (sq(&a2), sq(&u2));

    let c8 = Integer::one();
    let c6 = 6 * (&u2 - &a2);
    let c4 = &a4 - 4 * &a2 * &u2 + &u4;
    let c2 = -6 * &a2 * &u2 * (&u2 - &a2);
    let c0 = &u4 * &a4;

    even_poly(&[c0, c2, c4, c6, c8])
}

/// The degree-10 monic cofactor for the `b·u = a²` case with `a = pq`,
/// `b = p²`, `u = q²`:
/// `cuboid_poly(pq, p², q²) = (t - pq)(t + pq) · decic_cofactor(p, q)`.
pub fn decic_cofactor(p: &Integer, q: &Integer) -> UniPoly {
    let (p2, q2) = (sq(p), sq(q));
    let (p4, q4) = (sq(&p2), sq(&q2));
    let (p6, q6) = (&p4 * &p2, &q4 * &q2);
    let (p8, q8) = (sq(&p4), sq(&q4));
    let p10 = &p8 * &p2;
    let q10 = &q8 * &q2;

    let c10 = Integer::one();
    let c8 = (2 * &q2 + &p2) * (3 * &q2 - 2 * &p2);
    let c6 = &q8 + 10 * &p2 * &q6 + 4 * &p4 * &q4 - 14 * &p6 * &q2 + &p8;
    let c4 = -(&p2 * &q2) * (&q8 - 14 * &p2 * &q6 + 4 * &p4 * &q4 + 10 * &p6 * &q2 + &p8);
    let c2 = -(&p6 * &q6) * (&q2 + 2 * &p2) * (-2 * &q2 + 3 * &p2);
    let c0 = -(&q10 * &p10);

    even_poly(&[c0, c2, c4, c6, c8, c10])
}

/// Assemble a polynomial from its even-power coefficients `[c0, c2, c4, ...]`.
fn even_poly(even: &[Integer]) -> UniPoly {
    let mut coeffs = Vec::with_capacity(2 * even.len() - 1);
    for c in even {
        coeffs.push(c.clone());
        coeffs.push(Integer::from(0));
    }
    coeffs.pop();
    UniPoly::new(coeffs)
}

/// Classify a normalized triple into exactly one [`CaseTag`].
pub fn classify_case(params: &ParamTriple) -> CaseTag {
    let (a, b, u) = (params.a(), params.b(), params.u());
    if a == b && b == u {
        return CaseTag::AllEqual;
    }
    if a == b {
        return CaseTag::AEqualsB;
    }
    if a == u {
        return CaseTag::AEqualsU;
    }
    if b == u {
        return CaseTag::BEqualsU;
    }
    if b * u == sq(a) {
        if let Some((p, q)) = square_split(a, b, u) {
            return CaseTag::BuEqualsASquared { p, q };
        }
    }
    if a * u == sq(b) {
        if let Some((p, q)) = square_split(b, a, u) {
            return CaseTag::AuEqualsBSquared { p, q };
        }
    }
    CaseTag::General
}

/// Recover `(p, q)` with `mid = pq`, `sq1 = p²`, `sq2 = q²` from a triple
/// satisfying `sq1·sq2 = mid²`. Returns `None` when the decomposition does
/// not verify exactly (possible only for non-coprime triples).
fn square_split(mid: &Integer, sq1: &Integer, sq2: &Integer) -> Option<(Integer, Integer)> {
    let p = mid.gcd(sq1);
    let q = mid.gcd(sq2);
    if &p * &q == *mid && sq(&p) == *sq1 && sq(&q) == *sq2 {
        Some((p, q))
    } else {
        None
    }
}

/// The closed-form factorization of `cuboid_poly(params)` for special-case
/// triples, with conjecturally irreducible cofactors kept as single factors.
/// Returns `None` for the general case.
pub fn expected_factorization(params: &ParamTriple) -> Option<FactorList> {
    let tag = classify_case(params);
    expected_factorization_for(params, &tag)
}

/// Same as [`expected_factorization`] but reusing an already-computed tag.
pub fn expected_factorization_for(params: &ParamTriple, tag: &CaseTag) -> Option<FactorList> {
    let (a, b, u) = (params.a(), params.b(), params.u());
    let linear_pair = |r: &Integer| {
        (
            UniPoly::new(vec![-r.clone(), Integer::one()]),
            UniPoly::new(vec![r.clone(), Integer::one()]),
        )
    };
    let quad = |r: &Integer| UniPoly::new(vec![sq(r), Integer::from(0), Integer::one()]);

    let factors = match tag {
        // (t - a)^2 (t + a)^2 (t^2 + a^2)^4
        CaseTag::AllEqual => {
            let (lin_m, lin_p) = linear_pair(a);
            vec![(lin_m, 2), (lin_p, 2), (quad(a), 4)]
        }
        // (t^2 + a^2)^2 * octic_cofactor(a, u)
        CaseTag::AEqualsB => vec![(quad(a), 2), (octic_cofactor(a, u), 1)],
        // (t^2 + u^2)^4 (t - b)^2 (t + b)^2
        CaseTag::AEqualsU => {
            let (lin_m, lin_p) = linear_pair(b);
            vec![(quad(u), 4), (lin_m, 2), (lin_p, 2)]
        }
        // symmetric image of the previous case: (t^2 + u^2)^4 (t - a)^2 (t + a)^2
        CaseTag::BEqualsU => {
            let (lin_m, lin_p) = linear_pair(a);
            vec![(quad(u), 4), (lin_m, 2), (lin_p, 2)]
        }
        // (t - a)(t + a) * decic_cofactor(p, q)
        CaseTag::BuEqualsASquared { p, q } => {
            let (lin_m, lin_p) = linear_pair(a);
            vec![(lin_m, 1), (lin_p, 1), (decic_cofactor(p, q), 1)]
        }
        // (t - b)(t + b) * decic_cofactor(p, q)
        CaseTag::AuEqualsBSquared { p, q } => {
            let (lin_m, lin_p) = linear_pair(b);
            vec![(lin_m, 1), (lin_p, 1), (decic_cofactor(p, q), 1)]
        }
        CaseTag::General => return None,
    };
    Some(FactorList::new(1, Integer::one(), factors))
}

/// The conjecturally irreducible cofactor of a special case, if the case has
/// one: the octic for `a = b`, the decic for the square cases.
pub fn conjectural_cofactor(params: &ParamTriple, tag: &CaseTag) -> Option<UniPoly> {
    match tag {
        CaseTag::AEqualsB => Some(octic_cofactor(params.a(), params.u())),
        CaseTag::BuEqualsASquared { p, q } | CaseTag::AuEqualsBSquared { p, q } => {
            Some(decic_cofactor(p, q))
        }
        _ => None,
    }
}

/// Check a special-case closed-form identity by exact expansion: the
/// expected factor list multiplied out must equal the constructed polynomial.
pub fn verify_case_identity(params: &ParamTriple) -> Result<bool, CuboidPolyError> {
    let expected = expected_factorization(params).ok_or(CuboidPolyError::NotSpecialCase)?;
    Ok(expected.expand() == cuboid_poly(params))
}
