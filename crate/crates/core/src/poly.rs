//! Dense univariate polynomials with exact integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Float, FromPrimitive, ToPrimitive};

use crate::scalar::{small, Coefficient};

/// Polynomial with integer coefficients, lowest degree first.
///
/// Always canonical: no trailing zero coefficients, and the zero polynomial
/// is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial<T> {
    coeffs: Vec<T>,
}

pub(crate) fn add_exact<T: Coefficient>(a: &T, b: &T) -> T {
    a.checked_add(b).expect("integer coefficient overflow")
}

pub(crate) fn sub_exact<T: Coefficient>(a: &T, b: &T) -> T {
    a.checked_sub(b).expect("integer coefficient overflow")
}

pub(crate) fn mul_exact<T: Coefficient>(a: &T, b: &T) -> T {
    a.checked_mul(b).expect("integer coefficient overflow")
}

impl<T: Coefficient> IntPolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self
    where
        T: From<i64>,
    {
        Self::new(coeffs.iter().map(|&c| T::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(small(1))
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(small(1), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| mul_exact(c, k)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Division by a monic polynomial: returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dd = divisor.degree().unwrap();
        let Some(sd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if sd < dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); sd - dd + 1];
        for top in (dd..=sd).rev() {
            let lead = rem[top].clone();
            if lead.is_zero() {
                continue;
            }
            let shift = top - dd;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = sub_exact(&rem[shift + i], &mul_exact(&lead, dc));
            }
            quot[shift] = lead;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Exact division by a monic polynomial; `None` if the remainder is nonzero.
    pub fn div_exact_monic(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_monic(divisor);
        r.is_zero().then_some(q)
    }

    /// Horner evaluation at `x` in any structure with the needed operations.
    pub fn eval_with<R, L, M, A>(&self, x: &R, zero: R, mut lift: L, mut mul: M, mut add: A) -> R
    where
        L: FnMut(&T) -> R,
        M: FnMut(&R, &R) -> R,
        A: FnMut(&R, &R) -> R,
    {
        let mut acc = zero;
        for c in self.coeffs.iter().rev() {
            acc = add(&mul(&acc, x), &lift(c));
        }
        acc
    }

    /// Floating point evaluation.
    pub fn eval_float<F: Float + FromPrimitive>(&self, x: F) -> F {
        self.eval_with(
            &x,
            F::zero(),
            |c| F::from_f64(c.to_bigint().to_f64().unwrap_or(f64::NAN)).unwrap_or(F::nan()),
            |a, b| *a * *b,
            |a, b| *a + *b,
        )
    }

    /// True when only powers with the same parity as the degree appear.
    pub fn has_degree_parity(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self
                .coeffs
                .iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() || (d - i) % 2 == 0),
        }
    }
}

/// The polynomial `P_k` with `P_k(2cos θ) = 2cos(kθ)`:
/// `P_0 = 2`, `P_1 = y`, `P_k = y P_{k-1} - P_{k-2}`.
pub fn double_cosine<T: Coefficient>(k: usize) -> IntPolynomial<T> {
    let mut prev = IntPolynomial::constant(small(2));
    if k == 0 {
        return prev;
    }
    let mut cur = IntPolynomial::x();
    for _ in 1..k {
        let next = &cur.shift(1) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

impl<T: Coefficient> Add for &IntPolynomial<T> {
    type Output = IntPolynomial<T>;
    fn add(self, rhs: Self) -> IntPolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| add_exact(&self.coeff(i), &rhs.coeff(i))).collect())
    }
}

impl<T: Coefficient> Sub for &IntPolynomial<T> {
    type Output = IntPolynomial<T>;
    fn sub(self, rhs: Self) -> IntPolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| sub_exact(&self.coeff(i), &rhs.coeff(i))).collect())
    }
}

impl<T: Coefficient> Mul for &IntPolynomial<T> {
    type Output = IntPolynomial<T>;
    fn mul(self, rhs: Self) -> IntPolynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_exact(&out[i + j], &mul_exact(a, b));
            }
        }
        IntPolynomial::new(out)
    }
}

impl<T: Coefficient> Neg for &IntPolynomial<T> {
    type Output = IntPolynomial<T>;
    fn neg(self) -> IntPolynomial<T> {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Coefficient> fmt::Display for IntPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_polynomial(&self.coeffs, "x"))
    }
}

/// Formats `Σ coeffs[i] var^i`, highest degree first, e.g. `x^4 - 3x^2 + 1`.
pub(crate) fn format_polynomial<T: Coefficient>(coeffs: &[T], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one();
        if !unit || i == 0 {
            out.push_str(&mag.to_string());
        }
        match i {
            0 => {}
            1 => out.push_str(var),
            _ => {
                out.push_str(var);
                out.push('^');
                out.push_str(&i.to_string());
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = IntPolynomial<i64>;

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let p = P::new(vec![1, 2, 0, 0]);
        assert_eq!(p.coeffs(), &[1, 2]);
        assert_eq!(P::new(vec![0, 0]).coeffs(), &[] as &[i64]);
        assert_eq!(P::zero().degree(), None);
    }

    #[test]
    fn monic_division() {
        // x^3 - 1 = (x - 1)(x^2 + x + 1)
        let p = P::new(vec![-1, 0, 0, 1]);
        let d = P::new(vec![-1, 1]);
        assert_eq!(p.div_exact_monic(&d), Some(P::new(vec![1, 1, 1])));
        let (q, r) = P::new(vec![0, 0, 1]).div_rem_monic(&P::new(vec![-2, 0, 1]));
        assert_eq!(q, P::one());
        assert_eq!(r, P::constant(2));
        assert_eq!(P::new(vec![1, 0, 1]).div_exact_monic(&d), None);
    }

    #[test]
    fn double_cosine_matches_trig() {
        let theta = 0.37_f64;
        for k in 0..12 {
            let p = double_cosine::<i64>(k);
            let v = p.eval_float(2.0 * theta.cos());
            assert!((v - 2.0 * (k as f64 * theta).cos()).abs() < 1e-9, "k = {k}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(P::new(vec![1, 0, -3, 0, 1]).to_string(), "x^4 - 3x^2 + 1");
        assert_eq!(P::new(vec![0, -1]).to_string(), "-x");
        assert_eq!(P::zero().to_string(), "0");
    }
}
