//! Squarefree decomposition over ℤ (Yun's algorithm).

use crate::exactalg::UniPoly;

/// Decompose a primitive polynomial with positive leading coefficient into
/// pairwise-coprime primitive squarefree parts:
/// `f = Π part_i ^ multiplicity_i`.
///
/// Parts are returned with distinct multiplicities in increasing order;
/// constant parts are dropped.
pub fn squarefree_decomposition_z(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    assert!(
        f.degree().is_some_and(|d| d >= 1),
        "squarefree decomposition needs degree >= 1"
    );
    debug_assert!(f.is_primitive(), "input must be primitive");

    let deriv = f.derivative();
    let d0 = f.gcd(&deriv);
    if d0.deg() == 0 {
        return vec![(f.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut b = f.divexact(&d0).expect("gcd divides f");
    let mut c = deriv.divexact(&d0).expect("gcd divides f'");
    let mut i = 1u32;
    loop {
        let d = &c - &b.derivative();
        if d.is_zero() {
            // the remaining b is the factor of highest multiplicity
            if b.deg() > 0 {
                out.push((b, i));
            }
            break;
        }
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = b.divexact(&a).expect("Yun quotient is exact");
        c = d.divexact(&a).expect("Yun quotient is exact");
        i += 1;
        if b.deg() == 0 {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(coeffs)
    }

    #[test]
    fn squarefree_input_passes_through() {
        let f = p(&[-2, 0, 1]); // t^2 - 2
        assert_eq!(squarefree_decomposition_z(&f), vec![(f, 1)]);
    }

    #[test]
    fn multiplicities_recovered() {
        // (t-1)^2 (t+1)^2 (t^2+1)^4: parts t^2-1 at 2, t^2+1 at 4
        let f = p(&[-1, 1]).pow(2) * p(&[1, 1]).pow(2) * p(&[1, 0, 1]).pow(4);
        let decomp = squarefree_decomposition_z(&f);
        assert_eq!(decomp, vec![(p(&[-1, 0, 1]), 2), (p(&[1, 0, 1]), 4)]);
    }

    #[test]
    fn mixed_multiplicities() {
        // (t+2)(t^2+3)^3
        let f = p(&[2, 1]) * p(&[3, 0, 1]).pow(3);
        let decomp = squarefree_decomposition_z(&f);
        assert_eq!(decomp, vec![(p(&[2, 1]), 1), (p(&[3, 0, 1]), 3)]);
    }

    #[test]
    fn reconstruction() {
        let f = p(&[0, 1]).pow(3) * p(&[-5, 2]).pow(2) * p(&[7, 0, 0, 1]);
        let f = f.primitive_part();
        let decomp = squarefree_decomposition_z(&f);
        let mut prod = UniPoly::one();
        for (part, m) in &decomp {
            prod = &prod * &part.pow(*m);
        }
        assert_eq!(prod, f);
    }
}
