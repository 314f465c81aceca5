//! Minimal polynomials checked against cos(π/N) computed in fixed point.

use frieze::cyclo::{minimal_polynomial, weight_degree};
use frieze::BigInt;
use num_traits::{One, Signed, Zero};

const BITS: u32 = 256;

fn atan_inv(x: u64, scale: &BigInt) -> BigInt {
    // atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1))
    let x2 = BigInt::from(x * x);
    let mut power = scale / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// 2cos(π/n) scaled by 2^BITS.
fn two_cos(n: u64) -> BigInt {
    let scale = BigInt::one() << BITS;
    let pi = 16 * atan_inv(5, &scale) - 4 * atan_inv(239, &scale);
    let x = pi / BigInt::from(n);
    let x2 = (&x * &x) >> BITS;
    let mut term = scale.clone();
    let mut sum = scale.clone();
    let mut k = 1u64;
    while !term.is_zero() {
        let next: BigInt = (&term * &x2) >> BITS;
        term = -next / BigInt::from((2 * k - 1) * (2 * k));
        sum += &term;
        k += 1;
    }
    2 * sum
}

#[test]
fn vanishes_at_two_cos() {
    for n in [3u64, 4, 5, 7, 12, 15, 20, 30, 60] {
        let p = minimal_polynomial::<BigInt>(n as usize);
        assert_eq!(p.degree(), Some(weight_degree(n as usize)));
        let c = two_cos(n);
        let mut acc = BigInt::zero();
        for a in p.coeffs().iter().rev() {
            acc = ((acc * &c) >> BITS) + (a << BITS);
        }
        // |p(c)| < 2^-100
        assert!(acc.abs() < (BigInt::one() << (BITS - 100)), "n = {n}");
    }
}

#[test]
fn octagon_ring_has_degree_sixteen() {
    let p = minimal_polynomial::<BigInt>(60);
    assert_eq!(p.degree(), Some(16));
    assert!(p.is_monic());
}
