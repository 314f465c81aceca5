use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::element::RingElement;
use crate::poly::IntPolynomial;
use crate::scalar::Coefficient;

/// Exact sign of a real algebraic number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }
}

impl From<Ordering> for Sign {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

pub(crate) const BASE_BITS: u32 = 64;

/// Dyadic interval `[lo, hi] / 2^bits` containing `2cos(π/N)`.
#[derive(Debug, Clone)]
pub(crate) struct Enclosure {
    bits: u32,
    lo: BigInt,
    hi: BigInt,
}

fn sign_of(b: &BigInt) -> Sign {
    if b.is_zero() {
        Sign::Zero
    } else if b.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Sign of `p(m / 2^bits)`, computed as `2^{bits·deg} p(m / 2^bits)`.
fn poly_sign_at<T: Coefficient>(p: &IntPolynomial<T>, m: &BigInt, bits: u32) -> Sign {
    let deg = p.degree().unwrap_or(0) as u32;
    let mut acc = BigInt::zero();
    let mut mpow = BigInt::from(1);
    for (k, a) in p.coeffs().iter().enumerate() {
        if !a.is_zero() {
            acc += (a.to_bigint() * &mpow) << (bits * (deg - k as u32)) as usize;
        }
        mpow *= m;
    }
    sign_of(&acc)
}

impl Enclosure {
    /// Isolates the largest root of `minpoly`, which is `2cos(π/N)`.
    ///
    /// The f64 estimate is within 1e-15 of the root and the next root,
    /// `2cos(3π/N)`, is at least `8π²/N²` away, so the starting bracket of
    /// width `2^-30` contains exactly one root; the exact sign change confirms it.
    pub(crate) fn isolate<T: Coefficient>(minpoly: &IntPolynomial<T>, conductor: usize) -> Self {
        let start = 40u32;
        let estimate = 2.0 * (std::f64::consts::PI / conductor as f64).cos();
        let centre = BigInt::from((estimate * (1u64 << start) as f64).round() as i128);
        let pad = BigInt::from(1u64 << 10);
        let enc = Enclosure { bits: start, lo: &centre - &pad, hi: &centre + &pad };
        assert_eq!(poly_sign_at(minpoly, &enc.lo, start), Sign::Negative, "root isolation failed");
        assert_eq!(poly_sign_at(minpoly, &enc.hi, start), Sign::Positive, "root isolation failed");
        enc.refine(minpoly, BASE_BITS)
    }

    /// Bisects down to an interval of width `2^-bits`.
    pub(crate) fn refine<T: Coefficient>(&self, minpoly: &IntPolynomial<T>, bits: u32) -> Self {
        assert!(bits >= self.bits);
        let up = (bits - self.bits) as usize;
        let mut lo = &self.lo << up;
        let mut hi = &self.hi << up;
        let one = BigInt::from(1);
        while &hi - &lo > one {
            let mid: BigInt = (&lo + &hi) >> 1usize;
            match poly_sign_at(minpoly, &mid, bits) {
                Sign::Zero => {
                    // c rational only for N = 3, where c = 1 exactly.
                    lo = mid.clone();
                    hi = mid;
                }
                Sign::Negative => lo = mid,
                Sign::Positive => hi = mid,
            }
        }
        Enclosure { bits, lo, hi }
    }

    /// Lower and upper bounds of `Σ a_k c^k`, scaled by `2^{bits·(d-1)}`.
    /// Requires `lo > 0`, which holds since `c >= 1`.
    fn bounds<T: Coefficient>(&self, coeffs: &[T]) -> (BigInt, BigInt) {
        let d = coeffs.len() as u32;
        let mut lower = BigInt::zero();
        let mut upper = BigInt::zero();
        let mut lo_pow = BigInt::from(1);
        let mut hi_pow = BigInt::from(1);
        for (k, a) in coeffs.iter().enumerate() {
            if !a.is_zero() {
                let shift = (self.bits * (d - 1 - k as u32)) as usize;
                let a = a.to_bigint();
                let l = (&a * &lo_pow) << shift;
                let h = (&a * &hi_pow) << shift;
                if a.is_positive() {
                    lower += l;
                    upper += h;
                } else {
                    lower += h;
                    upper += l;
                }
            }
            lo_pow *= &self.lo;
            hi_pow *= &self.hi;
        }
        (lower, upper)
    }

    fn scale_bits(&self, d: usize) -> usize {
        self.bits as usize * d.saturating_sub(1)
    }
}

impl<T: Coefficient> RingElement<T> {
    /// Exact sign. Zero is decided structurally; otherwise the value is
    /// enclosed at 64 bits and the precision doubled until the enclosure
    /// excludes zero.
    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        let spec = self.spec();
        let mut enc = (*spec.base_enclosure()).clone();
        loop {
            let (lower, upper) = enc.bounds(self.coeffs());
            if lower.is_positive() {
                return Sign::Positive;
            }
            if upper.is_negative() {
                return Sign::Negative;
            }
            enc = enc.refine(spec.minpoly(), enc.bits * 2);
        }
    }

    /// Rational interval `[lower, upper]` containing the value, of width at most `2^-bits`
    /// (for moderate coefficient sizes).
    pub fn enclose(&self, bits: u32) -> (BigRational, BigRational) {
        let spec = self.spec();
        let base = spec.base_enclosure();
        let mut enc = (*base).clone();
        loop {
            let (lower, upper) = enc.bounds(self.coeffs());
            let denom = BigInt::from(1) << enc.scale_bits(self.coeffs().len());
            let lo = BigRational::new(lower, denom.clone());
            let hi = BigRational::new(upper, denom);
            let width = &hi - &lo;
            let target = BigRational::new(BigInt::from(1), BigInt::from(1) << bits as usize);
            if width <= target {
                return (lo, hi);
            }
            enc = enc.refine(spec.minpoly(), enc.bits * 2);
        }
    }

    /// Decimal approximation rounded to `digits` fractional digits.
    pub fn approximate(&self, digits: usize) -> String {
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8;
        let (lo, hi) = self.enclose(bits);
        let mid = (lo + hi) / BigRational::from_integer(BigInt::from(2));
        let scale = num_traits::pow(BigInt::from(10), digits);
        let scaled = (mid * BigRational::from_integer(scale.clone())).round().to_integer();
        let neg = scaled.is_negative();
        let (int, frac) = scaled.abs().div_rem(&scale);
        let mut out = String::new();
        if neg && !(int.is_zero() && frac.is_zero()) {
            out.push('-');
        }
        out.push_str(&int.to_string());
        if digits > 0 {
            out.push('.');
            out.push_str(&format!("{:0>width$}", frac.to_string(), width = digits));
        }
        out
    }
}
