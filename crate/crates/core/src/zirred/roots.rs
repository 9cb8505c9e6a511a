//! Complete rational-root enumeration via the rational root theorem.

use num_bigint::BigInt;
use num_integer::Integer as IntegerOps;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactalg::{Integer, Rational, UniPoly};
use crate::gfpfactor::primes;

/// All rational roots of a nonzero polynomial, sorted ascending, each listed
/// once. A root `n/d` in lowest terms requires `n` to divide the constant
/// term and `d` the leading coefficient, so candidates come from divisor
/// enumeration; for monic inputs this is integer divisor enumeration.
pub fn rational_roots(f: &UniPoly) -> Vec<Rational> {
    assert!(!f.is_zero(), "rational roots of the zero polynomial");
    let mut roots: Vec<Rational> = Vec::new();

    // strip powers of t: a zero constant term means a root at 0
    let low = f.coeffs().iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let g = UniPoly::new(f.coeffs()[low..].to_vec());
    if g.deg() == 0 {
        return roots;
    }

    let c0 = g.coeff(0).abs();
    let lc = g.leading_coeff().unwrap().abs();
    let num_divs = divisors(&c0);
    let den_divs = divisors(&lc);

    // quick divisibility filter for integer candidates: if r is a root then
    // (r - 1) | g(1) and (r + 1) | g(-1)
    let g1 = g.eval_integer(&Integer::one());
    let gm1 = g.eval_integer(&Integer::from(-1));

    for n in &num_divs {
        for d in &den_divs {
            if !n.gcd(d).is_one() {
                continue; // not in lowest terms; the reduced pair is tried anyway
            }
            for sign in [1i8, -1] {
                let num = if sign < 0 { -n.clone() } else { n.clone() };
                if d.is_one() {
                    let over = &num - Integer::one();
                    if !g1.is_zero() && !over.is_zero() && !g1.is_multiple_of(&over) {
                        continue;
                    }
                    let under = &num + Integer::one();
                    if !gm1.is_zero() && !under.is_zero() && !gm1.is_multiple_of(&under) {
                        continue;
                    }
                    if g.eval_integer(&num).is_zero() {
                        roots.push(Rational::from_integer(num));
                    }
                } else {
                    let cand = Rational::new(num, d.clone());
                    if g.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// All positive divisors of `n > 0`, unsorted.
pub(crate) fn divisors(n: &Integer) -> Vec<Integer> {
    let mut divs = vec![Integer::one()];
    for (p, e) in factorize(n) {
        let base = divs.clone();
        let mut power = Integer::one();
        for _ in 0..e {
            power *= &p;
            for d in &base {
                divs.push(d * &power);
            }
        }
    }
    divs
}

/// Prime factorization of `n > 0` as (prime, exponent) pairs.
pub(crate) fn factorize(n: &Integer) -> Vec<(Integer, u32)> {
    assert!(n.is_positive(), "factorize requires a positive integer");
    if let Some(small) = n.to_u64() {
        return factorize_u64(small)
            .into_iter()
            .map(|(p, e)| (Integer::from(p), e))
            .collect();
    }
    factorize_big(n.clone())
}

fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, out: &mut Vec<(u64, u32)>| match out.iter_mut().find(|(q, _)| *q == p)
    {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    };
    for p in [2u64, 3, 5] {
        while n.is_multiple_of(p) {
            n /= p;
            push(p, &mut out);
        }
    }
    // wheel over 30
    let mut d = 7u64;
    let increments = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut i = 0;
    while d <= 65_536 && d.saturating_mul(d) <= n {
        while n.is_multiple_of(d) {
            n /= d;
            push(d, &mut out);
        }
        d += increments[i];
        i = (i + 1) % increments.len();
    }
    // remaining cofactor: 1, a prime, or a semiprime-ish hard part for rho
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if primes::is_prime(m) {
            push(m, &mut out);
            continue;
        }
        let d = pollard_rho_u64(m);
        stack.push(d);
        stack.push(m / d);
    }
    out.sort_unstable();
    out
}

/// Pollard's rho (Floyd cycle detection); `n` composite, odd, with no small
/// factors.
fn pollard_rho_u64(n: u64) -> u64 {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let step = |x: u64, c: u64| (mul(x, x) + c) % n;
    for c in 1u64.. {
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = step(x, c);
            y = step(step(y, c), c);
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Factorization for integers beyond u64: trial division, Miller–Rabin, and
/// a big-integer Pollard rho.
fn factorize_big(mut n: BigInt) -> Vec<(Integer, u32)> {
    let mut out: Vec<(Integer, u32)> = Vec::new();
    let push = |p: Integer, out: &mut Vec<(Integer, u32)>| {
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => out.push((p, 1)),
        }
    };
    for p in std::iter::once(2u64).chain(primes::odd_primes().take_while(|&p| p < 100_000)) {
        let pb = BigInt::from(p);
        while n.is_multiple_of(&pb) {
            n /= &pb;
            push(pb.clone(), &mut out);
        }
        if n.is_one() {
            break;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(small) = m.to_u64() {
            for (p, e) in factorize_u64(small) {
                for _ in 0..e {
                    push(Integer::from(p), &mut out);
                }
            }
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut out);
            continue;
        }
        let d = pollard_rho_big(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out.sort();
    out
}

fn is_probable_prime(n: &BigInt) -> bool {
    let one = BigInt::one();
    let two = BigInt::from(2);
    let n_minus_1 = n - &one;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let a = BigInt::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho_big(n: &BigInt) -> BigInt {
    let one = BigInt::one();
    for c in 1u64.. {
        let c = BigInt::from(c);
        let step = |x: &BigInt| (x * x + &c).mod_floor(n);
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = step(&x);
            y = step(&step(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuboidpoly::{cuboid_poly, octic_cofactor, ParamTriple};

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter()
            .map(|&x| Rational::from_integer(Integer::from(x)))
            .collect()
    }

    #[test]
    fn unit_triple_roots() {
        let f = cuboid_poly(&ParamTriple::from_u64(1, 1, 1).unwrap());
        assert_eq!(rational_roots(&f), ints(&[-1, 1]));
    }

    #[test]
    fn square_case_roots() {
        // (a,b,u) = (2,4,1): roots are ±a = ±2
        let f = cuboid_poly(&ParamTriple::from_u64(2, 4, 1).unwrap());
        assert_eq!(rational_roots(&f), ints(&[-2, 2]));
    }

    #[test]
    fn octic_1_2_has_no_roots() {
        let f = octic_cofactor(&1.into(), &2.into());
        assert!(rational_roots(&f).is_empty());
    }

    #[test]
    fn fractional_and_zero_roots() {
        // t(2t - 1)(t + 3) = 2t^3 + 5t^2 - 3t
        let f = UniPoly::from_i64(&[0, -3, 5, 2]);
        let expected = vec![
            Rational::from_integer(Integer::from(-3)),
            Rational::zero(),
            Rational::new(Integer::one(), Integer::from(2)),
        ];
        assert_eq!(rational_roots(&f), expected);
    }

    #[test]
    fn degree_one_root() {
        let f = UniPoly::from_i64(&[6, -4]); // -4t + 6 -> root 3/2
        assert_eq!(
            rational_roots(&f),
            vec![Rational::new(Integer::from(3), Integer::from(2))]
        );
    }

    #[test]
    fn divisor_enumeration() {
        let mut d = divisors(&Integer::from(12));
        d.sort();
        let expected: Vec<Integer> = [1, 2, 3, 4, 6, 12].iter().map(|&x| x.into()).collect();
        assert_eq!(d, expected);
    }

    #[test]
    fn factorize_large_fourth_powers() {
        // 22^4 * 21^4 * 20^4 style constant terms
        let n = Integer::from(22u64).pow(4) * Integer::from(21u64).pow(4)
            * Integer::from(20u64).pow(4);
        let fact = factorize(&n);
        let reassembled: Integer = fact
            .iter()
            .map(|(p, e)| p.pow(*e))
            .product();
        assert_eq!(reassembled, n);
        // 22 = 2*11, 21 = 3*7, 20 = 2^2*5
        assert!(fact.contains(&(Integer::from(11), 4)));
        assert!(fact.contains(&(Integer::from(2), 12)));
    }

    #[test]
    fn pollard_rho_on_semiprime() {
        let f = factorize_u64(1_000_003u64 * 998_117);
        assert_eq!(f, vec![(998_117, 1), (1_000_003, 1)]);
    }
}
