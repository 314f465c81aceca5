use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive, Zero};

use super::ring::RingSpec;
use super::RingError;
use crate::poly::IntPolynomial;
use crate::scalar::Coefficient;

/// An element of `Z[2cos(π/N)]`, as power-basis coordinates.
#[derive(Clone)]
pub struct RingElement<T> {
    spec: Arc<RingSpec<T>>,
    coeffs: Vec<T>,
}

impl<T: Coefficient> RingElement<T> {
    pub(crate) fn from_raw(spec: Arc<RingSpec<T>>, coeffs: Vec<T>) -> Self {
        debug_assert_eq!(coeffs.len(), spec.degree());
        Self { spec, coeffs }
    }

    /// Builds an element from exactly `d` power-basis coordinates.
    pub fn from_coeffs(spec: &Arc<RingSpec<T>>, coeffs: Vec<T>) -> Result<Self, RingError> {
        if coeffs.len() != spec.degree() {
            return Err(RingError::WrongLength { expected: spec.degree(), got: coeffs.len() });
        }
        Ok(Self { spec: spec.clone(), coeffs })
    }

    pub fn spec(&self) -> &Arc<RingSpec<T>> {
        &self.spec
    }

    pub fn conductor(&self) -> usize {
        self.spec.conductor()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value when the element is a rational integer.
    pub fn as_integer(&self) -> Option<&T> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    pub fn to_polynomial(&self) -> IntPolynomial<T> {
        IntPolynomial::new(self.coeffs.clone())
    }

    fn check_spec(&self, other: &Self) -> Result<(), RingError> {
        if Arc::ptr_eq(&self.spec, &other.spec) || *self.spec == *other.spec {
            Ok(())
        } else {
            Err(RingError::SpecMismatch { left: self.conductor(), right: other.conductor() })
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&T, &T) -> Option<T>,
    ) -> Result<Self, RingError> {
        self.check_spec(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a, b).ok_or(RingError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Self { spec: self.spec.clone(), coeffs })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.zip_with(other, |a, b| a.checked_add(b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.zip_with(other, |a, b| a.checked_sub(b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_spec(other)?;
        let d = self.coeffs.len();
        let mut prod = vec![T::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a.checked_mul(b).ok_or(RingError::Overflow)?;
                prod[i + j] = prod[i + j].checked_add(&t).ok_or(RingError::Overflow)?;
            }
        }
        let coeffs = self.spec.reduce_product(prod)?;
        Ok(Self { spec: self.spec.clone(), coeffs })
    }

    /// `self * a - b`, the step of the diagonal recurrence.
    pub fn try_mul_sub(&self, a: &Self, b: &Self) -> Result<Self, RingError> {
        self.try_mul(a)?.try_sub(b)
    }

    pub fn try_scale(&self, k: &T) -> Result<Self, RingError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.checked_mul(k).ok_or(RingError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Self { spec: self.spec.clone(), coeffs })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Floating point value, with `c = 2cos(π/N)` evaluated in `F`.
    pub fn to_float<F: Float + FloatConst + FromPrimitive>(&self) -> F {
        let n = F::from_usize(self.conductor()).unwrap();
        let c = (F::PI() / n).cos() * F::from_f64(2.0).unwrap();
        self.coeffs.iter().rev().fold(F::zero(), |acc, k| {
            acc * c + F::from_f64(k.to_bigint().to_f64().unwrap_or(f64::NAN)).unwrap()
        })
    }

    pub fn to_f64(&self) -> f64 {
        self.to_float::<f64>()
    }
}

impl<T: Coefficient> PartialEq for RingElement<T> {
    fn eq(&self, other: &Self) -> bool {
        *self.spec == *other.spec && self.coeffs == other.coeffs
    }
}

impl<T: Coefficient> Eq for RingElement<T> {}

impl<T: Coefficient> std::hash::Hash for RingElement<T> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.conductor().hash(state);
        self.coeffs.hash(state);
    }
}

impl<T: Coefficient> fmt::Debug for RingElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement(N={}, {:?})", self.conductor(), self.coeffs)
    }
}

impl<T: Coefficient> fmt::Display for RingElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::poly::format_polynomial(&self.coeffs, "c"))
    }
}

// Operator forms panic on ring mismatch or fixed-width overflow; the `try_`
// methods report those as errors.
macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<T: Coefficient> $tr for &RingElement<T> {
            type Output = RingElement<T>;
            fn $method(self, rhs: Self) -> RingElement<T> {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl<T: Coefficient> $tr for RingElement<T> {
            type Output = RingElement<T>;
            fn $method(self, rhs: Self) -> RingElement<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl<T: Coefficient> Neg for &RingElement<T> {
    type Output = RingElement<T>;
    fn neg(self) -> RingElement<T> {
        RingElement {
            spec: self.spec.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::make_ring;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let ring = make_ring::<i64>(4).unwrap();
        let c = ring.generator();
        assert_eq!(&c * &c, ring.integer(2));
    }

    #[test]
    fn golden_ratio_relation() {
        let ring = make_ring::<i64>(5).unwrap();
        let t = ring.generator();
        assert_eq!(&t * &t, &t + &ring.one());
    }

    #[test]
    fn additive_identity() {
        let ring = make_ring::<i64>(7).unwrap();
        let a = RingElement::from_coeffs(&ring, vec![3, -1, 2]).unwrap();
        assert_eq!(&a + &ring.zero(), a);
    }

    #[test]
    fn weights_satisfy_their_minimal_polynomials() {
        let big = make_ring::<i64>(60).unwrap();
        let checks: [(usize, &[i64]); 4] = [
            (3, &[-1, 1]),
            (4, &[-2, 0, 1]),
            (5, &[-1, -1, 1]),
            (6, &[-3, 0, 1]),
        ];
        for (n, poly) in checks {
            let w = big.part_weight(n).unwrap();
            let p = IntPolynomial::<i64>::from_i64(poly);
            let v = p.eval_with(&w, big.zero(), |k| big.integer(*k), |a, b| a * b, |a, b| a + b);
            assert!(v.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = make_ring::<i64>(4).unwrap().one();
        let b = make_ring::<i64>(5).unwrap().one();
        assert_eq!(a.try_add(&b).unwrap_err(), RingError::SpecMismatch { left: 4, right: 5 });
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        let ring = make_ring::<i64>(3).unwrap();
        let big = ring.integer(i64::MAX / 2);
        assert_eq!(big.try_mul(&big).unwrap_err(), RingError::Overflow);
    }

    #[test]
    fn float_value() {
        let ring = make_ring::<BigInt>(8).unwrap();
        let c = ring.generator();
        let expect = 2.0 * (std::f64::consts::PI / 8.0).cos();
        assert!((c.to_f64() - expect).abs() < 1e-12);
        assert!((c.to_float::<f32>() - expect as f32).abs() < 1e-5);
    }

    fn element(n: usize) -> impl Strategy<Value = Vec<i64>> {
        let d = make_ring::<i64>(n).unwrap().degree();
        proptest::collection::vec(-20i64..20, d)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in element(60), b in element(60), c in element(60)) {
            let ring = make_ring::<BigInt>(60).unwrap();
            let lift = |v: Vec<i64>| {
                RingElement::from_coeffs(&ring, v.into_iter().map(BigInt::from).collect()).unwrap()
            };
            let (a, b, c) = (lift(a), lift(b), lift(c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
        }

        #[test]
        fn multiplication_agrees_with_floats(a in element(12), b in element(12)) {
            let ring = make_ring::<i64>(12).unwrap();
            let a = RingElement::from_coeffs(&ring, a).unwrap();
            let b = RingElement::from_coeffs(&ring, b).unwrap();
            let p = (&a * &b).to_f64();
            prop_assert!((p - a.to_f64() * b.to_f64()).abs() < 1e-6 * (1.0 + p.abs()));
        }
    }
}
