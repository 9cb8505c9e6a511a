//! Quadratic Hensel lifting of a squarefree factorization mod p to mod p^k.

use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, Zero};

use super::ZirredError;
use crate::exactalg::{Integer, UniPoly};
use crate::gfpfactor::{primes, reduce_mod_p, GFPoly};

/// Lift monic factors of `f` modulo `p` to modulo `p^k`.
///
/// Preconditions (violations return [`ZirredError::LiftFailure`]):
/// `p` does not divide `lc(f)`, `f` is squarefree mod `p`, every given
/// factor is monic, and `lc(f) · Π factors ≡ f (mod p)`.
///
/// Returns monic factors with coefficients in `[0, p^k)`, in input order,
/// each congruent mod `p` to its input, with
/// `lc(f) · Π lifted ≡ f (mod p^k)`.
pub fn hensel_lift(f: &UniPoly, factors: &[GFPoly], k: u32) -> Result<Vec<UniPoly>, ZirredError> {
    if factors.is_empty() {
        return Err(ZirredError::LiftFailure("no factors given"));
    }
    let p = factors[0].modulus();
    if factors.iter().any(|g| g.modulus() != p) {
        return Err(ZirredError::LiftFailure("mixed moduli"));
    }
    if factors.iter().any(|g| !g.is_monic()) {
        return Err(ZirredError::LiftFailure("factors must be monic"));
    }
    let lc = f
        .leading_coeff()
        .ok_or(ZirredError::LiftFailure("zero polynomial"))?
        .clone();
    if lc.is_multiple_of(&Integer::from(p)) {
        return Err(ZirredError::LiftFailure("p divides the leading coefficient"));
    }
    let f_p = reduce_mod_p(f, p).expect("modulus comes from a GFPoly");
    if !f_p.is_squarefree() {
        return Err(ZirredError::LiftFailure("f is not squarefree mod p"));
    }
    let mut product = GFPoly::constant(p, f_p.leading_coeff());
    for g in factors {
        product = product.mul(g);
    }
    if product != f_p {
        return Err(ZirredError::LiftFailure("factors do not multiply to f mod p"));
    }

    let target = Integer::from(p).pow(k);
    let lifted = lift_to_modulus(f, factors, p, &target);
    Ok(lifted.into_iter().map(|g| zmod(&g, &target)).collect())
}

/// Core lifting loop: returns monic factors mod `m` for the smallest
/// quadratically-reached modulus `m >= target`, in input order.
pub(super) fn lift_to_modulus(
    f: &UniPoly,
    factors: &[GFPoly],
    p: u64,
    target: &Integer,
) -> Vec<UniPoly> {
    let lc = f.leading_coeff().unwrap().clone();
    let mut m = Integer::from(p);

    if factors.len() == 1 {
        // nothing to lift: the monic image of f mod target is the factor
        while &m < target {
            m = &m * &m;
        }
        let inv = mod_inverse(&lc, &m);
        return vec![zmod(&f.scale(&inv), &m)];
    }

    // Leaves: lc·g1, g2, ..., gr reduced mod p. The leftmost leaf absorbs the
    // leading coefficient so every right-hand product stays monic.
    let mut leaves: Vec<UniPoly> = factors.iter().map(gf_to_unipoly).collect();
    let lc_p = zmod(&UniPoly::constant(lc.clone()), &m);
    leaves[0] = zmod(&(&leaves[0] * &lc_p), &m);

    let mut tree = build_tree(&leaves, p);
    set_root_poly(&mut tree, f.clone());

    while &m < target {
        let m2 = &m * &m;
        lift_node(&mut tree, &m2);
        m = m2;
    }

    let mut out = Vec::with_capacity(factors.len());
    collect_leaves(&tree, &mut out);
    // restore the leftmost leaf to monic form
    let inv = mod_inverse(&lc, &m);
    out[0] = zmod(&out[0].scale(&inv), &m);
    out
}

enum Tree {
    Leaf {
        poly: UniPoly,
    },
    Node {
        poly: UniPoly,
        left: Box<Tree>,
        right: Box<Tree>,
        s: UniPoly,
        t: UniPoly,
    },
}

impl Tree {
    fn poly(&self) -> &UniPoly {
        match self {
            Tree::Leaf { poly } | Tree::Node { poly, .. } => poly,
        }
    }

    fn set_poly(&mut self, new: UniPoly) {
        match self {
            Tree::Leaf { poly } | Tree::Node { poly, .. } => *poly = new,
        }
    }
}

fn build_tree(leaves: &[UniPoly], p: u64) -> Tree {
    if leaves.len() == 1 {
        return Tree::Leaf {
            poly: leaves[0].clone(),
        };
    }
    let mid = leaves.len() / 2;
    let left = build_tree(&leaves[..mid], p);
    let right = build_tree(&leaves[mid..], p);
    let m = Integer::from(p);
    let poly = zmod(&(left.poly() * right.poly()), &m);
    // Bezout pair for the children over GF(p): s·g + t·h = 1.
    let g = reduce_mod_p(left.poly(), p).unwrap();
    let h = reduce_mod_p(right.poly(), p).unwrap();
    let (s, t) = gf_eea(&g, &h);
    Tree::Node {
        poly,
        left: Box::new(left),
        right: Box::new(right),
        s: gf_to_unipoly(&s),
        t: gf_to_unipoly(&t),
    }
}

fn set_root_poly(tree: &mut Tree, f: UniPoly) {
    tree.set_poly(f);
}

fn collect_leaves(tree: &Tree, out: &mut Vec<UniPoly>) {
    match tree {
        Tree::Leaf { poly } => out.push(poly.clone()),
        Tree::Node { left, right, .. } => {
            collect_leaves(left, out);
            collect_leaves(right, out);
        }
    }
}

/// Lift every pair in the subtree from modulus `m` to `m2 = m²`, top-down.
/// The node's own `poly` must already be valid mod `m2` (the root holds the
/// exact integer polynomial; inner nodes are updated by their parents).
fn lift_node(tree: &mut Tree, m2: &Integer) {
    let Tree::Node {
        poly,
        left,
        right,
        s,
        t,
    } = tree
    else {
        return;
    };
    let (g2, h2, s2, t2) = hensel_step(poly, left.poly(), right.poly(), s, t, m2);
    left.set_poly(g2);
    right.set_poly(h2);
    *s = s2;
    *t = t2;
    lift_node(left, m2);
    lift_node(right, m2);
}

/// One quadratic Hensel step: from `f ≡ g·h (mod m)`, `s·g + t·h ≡ 1 (mod m)`
/// with `h` monic, produce the same data valid mod `m²`.
fn hensel_step(
    f: &UniPoly,
    g: &UniPoly,
    h: &UniPoly,
    s: &UniPoly,
    t: &UniPoly,
    m2: &Integer,
) -> (UniPoly, UniPoly, UniPoly, UniPoly) {
    let e = zmod(&(f - &(g * h)), m2);
    let (q, r) = zdivrem_monic(&zmod(&(s * &e), m2), h, m2);
    let g2 = zmod(&(&(g + &(t * &e)) + &(&q * g)), m2);
    let h2 = zmod(&(h + &r), m2);
    debug_assert!(h2.is_monic(), "lifted right factor must stay monic");

    let b = zmod(&(&(&(s * &g2) + &(t * &h2)) - &UniPoly::one()), m2);
    let (c, d) = zdivrem_monic(&zmod(&(s * &b), m2), &h2, m2);
    let s2 = zmod(&(s - &d), m2);
    let t2 = zmod(&(&(t - &(t * &b)) - &(&c * &g2)), m2);
    (g2, h2, s2, t2)
}

/// Coefficient-wise reduction into `[0, m)`.
pub(super) fn zmod(f: &UniPoly, m: &Integer) -> UniPoly {
    UniPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficient-wise symmetric representative in `(-m/2, m/2]`.
pub(super) fn zmod_symmetric(f: &UniPoly, m: &Integer) -> UniPoly {
    let half = m / 2;
    UniPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division with remainder modulo `m` by a monic divisor.
fn zdivrem_monic(a: &UniPoly, b: &UniPoly, m: &Integer) -> (UniPoly, UniPoly) {
    debug_assert!(b.is_monic(), "divisor must be monic");
    let bd = b.deg();
    if a.is_zero() || a.deg() < bd {
        return (UniPoly::zero(), a.clone());
    }
    let mut rem: Vec<Integer> = a.coeffs().to_vec();
    let mut quot = vec![Integer::zero(); a.deg() - bd + 1];
    for i in (bd..rem.len()).rev() {
        let q = rem[i].mod_floor(m);
        if q.is_zero() {
            continue;
        }
        for (j, bc) in b.coeffs().iter().enumerate() {
            let idx = i - bd + j;
            let v = (&rem[idx] - &q * bc).mod_floor(m);
            rem[idx] = v;
        }
        quot[i - bd] = q;
    }
    rem.truncate(bd);
    (UniPoly::new(quot), UniPoly::new(rem))
}

/// Inverse of `a` modulo `m` (gcd must be 1).
pub(super) fn mod_inverse(a: &Integer, m: &Integer) -> Integer {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one() || e.gcd == Integer::from(-1), "not invertible");
    let x = if e.gcd.is_negative() { -e.x } else { e.x };
    x.mod_floor(m)
}

/// Extended Euclid over GF(p): returns `(s, t)` with `s·g + t·h = 1`.
/// Requires `gcd(g, h) = 1`.
fn gf_eea(g: &GFPoly, h: &GFPoly) -> (GFPoly, GFPoly) {
    let p = g.modulus();
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1) = (GFPoly::one(p), GFPoly::zero(p));
    let (mut t0, mut t1) = (GFPoly::zero(p), GFPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        (r0, r1) = (r1, r);
        let ns = s0.sub(&q.mul(&s1));
        (s0, s1) = (s1, ns);
        let nt = t0.sub(&q.mul(&t1));
        (t0, t1) = (t1, nt);
    }
    assert_eq!(r0.deg(), 0, "factors are not coprime mod p");
    let inv = primes::pow_mod(r0.leading_coeff(), p - 2, p);
    (s0.mul_scalar(inv), t0.mul_scalar(inv))
}

fn gf_to_unipoly(g: &GFPoly) -> UniPoly {
    UniPoly::new(g.coeffs().iter().map(|&c| Integer::from(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, coeffs: &[u64]) -> GFPoly {
        GFPoly::new(p, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn lift_t2_minus_1_mod_9() {
        let f = UniPoly::from_i64(&[-1, 0, 1]);
        let factors = vec![gf(3, &[1, 1]), gf(3, &[2, 1])];
        let lifted = hensel_lift(&f, &factors, 2).unwrap();
        assert_eq!(lifted[0], UniPoly::from_i64(&[1, 1]));
        assert_eq!(lifted[1], UniPoly::from_i64(&[8, 1]));
        let m = Integer::from(9);
        assert_eq!(zmod(&(&lifted[0] * &lifted[1]), &m), zmod(&f, &m));
    }

    #[test]
    fn lift_t2_plus_1_mod_25() {
        let f = UniPoly::from_i64(&[1, 0, 1]);
        let factors = vec![gf(5, &[2, 1]), gf(5, &[3, 1])];
        let lifted = hensel_lift(&f, &factors, 2).unwrap();
        let m = Integer::from(25);
        assert_eq!(zmod(&(&lifted[0] * &lifted[1]), &m), zmod(&f, &m));
        // each factor reduces mod 5 to its input
        for (l, g) in lifted.iter().zip(&factors) {
            assert_eq!(&reduce_mod_p(l, 5).unwrap(), g);
        }
    }

    #[test]
    fn lift_rejects_non_squarefree() {
        let f = UniPoly::from_i64(&[1, 2, 1]); // (t+1)^2
        let factors = vec![gf(3, &[1, 1]), gf(3, &[1, 1])];
        assert_eq!(
            hensel_lift(&f, &factors, 2),
            Err(ZirredError::LiftFailure("f is not squarefree mod p"))
        );
    }

    #[test]
    fn lift_rejects_wrong_product() {
        let f = UniPoly::from_i64(&[-1, 0, 1]);
        let factors = vec![gf(3, &[1, 1]), gf(3, &[1, 1])];
        assert!(hensel_lift(&f, &factors, 2).is_err());
    }

    #[test]
    fn lift_high_power_many_factors() {
        // f = (t-1)(t+2)(2t+5)(t^2+t+7), lifted mod 5^8 from factors mod 5;
        // the monic images mod 5 are t+4, t+2, t, t^2+t+2 — all distinct.
        let f = UniPoly::from_i64(&[-1, 1])
            * UniPoly::from_i64(&[2, 1])
            * UniPoly::from_i64(&[5, 2])
            * UniPoly::from_i64(&[7, 1, 1]);
        let p = 5u64;
        let reduced = reduce_mod_p(&f, p).unwrap();
        let fact = crate::gfpfactor::factor(&reduced, 1);
        let factors: Vec<GFPoly> = fact.factors.iter().map(|(g, _)| g.clone()).collect();
        let lifted = hensel_lift(&f, &factors, 8).unwrap();
        let m = Integer::from(p).pow(8);
        let mut prod = UniPoly::constant(f.leading_coeff().unwrap().clone());
        for l in &lifted {
            prod = zmod(&(&prod * l), &m);
        }
        assert_eq!(prod, zmod(&f, &m));
        for (l, g) in lifted.iter().zip(&factors) {
            assert_eq!(&reduce_mod_p(l, p).unwrap(), g);
        }
    }

    #[test]
    fn mod_inverse_basic() {
        let m = Integer::from(243);
        let a = Integer::from(7);
        let inv = mod_inverse(&a, &m);
        assert_eq!((a * inv).mod_floor(&m), Integer::from(1));
    }
}
