use std::fmt;

use num_traits::{One, Signed};

use super::{Integer, UniPoly};

/// A factorization over ℤ in canonical form:
/// `unit * content * Π factor_i ^ multiplicity_i` reconstructs the input
/// exactly, where every factor is primitive with positive leading
/// coefficient, `content > 0`, and `unit = ±1`.
///
/// Factors are kept sorted (degree, then coefficients) with duplicates
/// merged, so two factorizations of the same polynomial compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorList {
    unit: i8,
    content: Integer,
    factors: Vec<(UniPoly, u32)>,
}

impl FactorList {
    /// Assemble and canonicalize. Each factor must be primitive with a
    /// positive leading coefficient and nonzero multiplicity.
    pub fn new(unit: i8, content: Integer, factors: Vec<(UniPoly, u32)>) -> Self {
        assert!(unit == 1 || unit == -1, "unit must be ±1");
        assert!(content.is_positive(), "content must be positive");
        let mut factors: Vec<(UniPoly, u32)> = factors
            .into_iter()
            .inspect(|(f, m)| {
                debug_assert!(*m > 0, "zero multiplicity");
                debug_assert!(f.is_primitive(), "factor not primitive: {f}");
            })
            .collect();
        factors.sort_by(|(a, _), (b, _)| a.canonical_cmp(b));
        let mut merged: Vec<(UniPoly, u32)> = Vec::with_capacity(factors.len());
        for (f, m) in factors {
            match merged.last_mut() {
                Some((g, n)) if *g == f => *n += m,
                _ => merged.push((f, m)),
            }
        }
        FactorList {
            unit,
            content,
            factors: merged,
        }
    }

    /// The factorization of a unit: no factors at all.
    pub fn unit_only(unit: i8, content: Integer) -> Self {
        FactorList::new(unit, content, Vec::new())
    }

    pub fn unit(&self) -> i8 {
        self.unit
    }

    pub fn content(&self) -> &Integer {
        &self.content
    }

    pub fn factors(&self) -> &[(UniPoly, u32)] {
        &self.factors
    }

    /// Number of distinct factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total factor count with multiplicity.
    pub fn total_multiplicity(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }

    /// True when the list is a single factor of multiplicity one and trivial
    /// unit/content, i.e. the factored polynomial was already irreducible.
    pub fn is_trivial(&self) -> bool {
        self.unit == 1
            && self.content.is_one()
            && self.factors.len() == 1
            && self.factors[0].1 == 1
    }

    /// Multiply everything back out.
    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::constant(&self.content * Integer::from(self.unit));
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

impl fmt::Display for FactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit < 0 {
            write!(f, "-1")?;
            if !self.content.is_one() || self.factors.is_empty() {
                write!(f, " * ")?;
            }
        }
        let mut wrote = self.unit < 0;
        if !self.content.is_one() || self.factors.is_empty() {
            write!(f, "{}", self.content)?;
            wrote = true;
        }
        for (p, m) in &self.factors {
            if wrote {
                write!(f, " * ")?;
            }
            wrote = true;
            if *m == 1 {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})^{m}")?;
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
    fn expand_reconstructs() {
        // -6 (t-1)^2 (t^2+1)
        let fl = FactorList::new(
            -1,
            Integer::from(6),
            vec![(p(&[-1, 1]), 2), (p(&[1, 0, 1]), 1)],
        );
        let expanded = fl.expand();
        let direct = p(&[-1, 1]).pow(2) * p(&[1, 0, 1]) * UniPoly::constant(Integer::from(-6));
        assert_eq!(expanded, direct);
    }

    #[test]
    fn canonical_order_and_merge() {
        let a = FactorList::new(
            1,
            Integer::one(),
            vec![(p(&[1, 0, 1]), 1), (p(&[-1, 1]), 1), (p(&[-1, 1]), 1)],
        );
        let b = FactorList::new(
            1,
            Integer::one(),
            vec![(p(&[-1, 1]), 2), (p(&[1, 0, 1]), 1)],
        );
        assert_eq!(a, b);
        assert_eq!(a.total_multiplicity(), 3);
    }

    #[test]
    fn display_shape() {
        let fl = FactorList::new(1, Integer::from(2), vec![(p(&[1, 1]), 2)]);
        assert_eq!(fl.to_string(), "2 * (t + 1)^2");
    }
}
