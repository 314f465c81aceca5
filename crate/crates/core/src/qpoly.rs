//! The polynomials `Q_0 = 1`, `Q_1 = x`, `Q_n = x Q_{n-1} - Q_{n-2}`.
//!
//! `Q_i(t)` is row i of the frieze of an n-gon with no diagonals and weight t,
//! and `Q_{n-2}(2cos(π/n)) = 1`, `Q_{n-1}(2cos(π/n)) = 0` make that frieze close.

use std::sync::Arc;

use num_integer::{binomial, gcd};
use thiserror::Error;

use crate::cyclo::{make_ring, RingElement, RingError, RingSpec, Sign};
use crate::frieze::{generate, FriezeError, FriezePattern};
use crate::poly::IntPolynomial;
use crate::scalar::{small, Coefficient};

pub fn q_recurrence<T: Coefficient>(n: usize) -> IntPolynomial<T> {
    let mut prev = IntPolynomial::one();
    let mut cur = IntPolynomial::x();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur.shift(1) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `Σ_{0 <= k <= n/2} (-1)^k C(n-k, k) x^{n-2k}`.
pub fn q_closed_form<T: Coefficient>(n: usize) -> IntPolynomial<T> {
    let mut coeffs = vec![T::zero(); n + 1];
    for k in 0..=n / 2 {
        let c: T = binomial(T::from((n - k) as i32), T::from(k as i32));
        coeffs[n - 2 * k] = if k % 2 == 0 { c } else { -c };
    }
    IntPolynomial::new(coeffs)
}

/// Horner evaluation of an integer polynomial at a ring element.
pub fn eval_in_ring<T: Coefficient>(p: &IntPolynomial<T>, x: &RingElement<T>) -> Result<RingElement<T>, RingError> {
    let ring = x.spec();
    let mut acc = ring.zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.try_mul(x)?.try_add(&ring.integer(c.clone()))?;
    }
    Ok(acc)
}

/// `Q_{n-2}(w_n) = 1` and `Q_{n-1}(w_n) = 0` in `Z[2cos(π/n)]`.
pub fn weight_identities_hold<T: Coefficient>(n: usize) -> Result<bool, RingError> {
    let ring = make_ring::<T>(n)?;
    let w = ring.part_weight(n)?;
    let q2 = eval_in_ring(&q_recurrence(n - 2), &w)?;
    let q1 = eval_in_ring(&q_recurrence(n - 1), &w)?;
    Ok(q2.is_one() && q1.is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AltRootError<T: Coefficient> {
    #[error("need odd k >= 3 with k < n and gcd(k, n) = 1, got n = {n}, k = {k}")]
    PreconditionViolation { n: usize, k: usize },
    #[error(transparent)]
    Frieze(#[from] FriezeError<T>),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Debug)]
pub struct AltRootReport<T: Coefficient> {
    pub n: usize,
    pub k: usize,
    pub weight: RingElement<T>,
    pub pattern: FriezePattern<T>,
    /// Signs of rows `1..=n-3`, indexed `[row - 1][column]`.
    pub signs: Vec<Vec<Sign>>,
}

impl<T: Coefficient> AltRootReport<T> {
    pub fn negative_count(&self) -> usize {
        self.signs.iter().flatten().filter(|s| s.is_negative()).count()
    }

    pub fn has_negative(&self) -> bool {
        self.negative_count() > 0
    }
}

/// Frieze of the n-gon with no diagonals and weight `2cos(kπ/n)` in place of
/// `2cos(π/n)`. It still closes, but has negative entries.
pub fn alt_root_entries<T: Coefficient>(n: usize, k: usize) -> Result<AltRootReport<T>, AltRootError<T>> {
    if k < 3 || k % 2 == 0 || k >= n || gcd(k, n) != 1 {
        return Err(AltRootError::PreconditionViolation { n, k });
    }
    let ring: Arc<RingSpec<T>> = make_ring(n)?;
    let weight = ring.double_cosine(k);
    let pattern = generate(&vec![weight.clone(); n])?;
    let signs = pattern.interior_signs();
    let report = AltRootReport { n, k, weight, pattern, signs };
    // Negative entries are expected; checked on every call.
    assert!(report.has_negative() || n == 3, "no negative entry for n = {n}, k = {k}");
    Ok(report)
}

/// Roots `2cos(iπ/n)` shared by `Q_{n-2} - 1` and `Q_{n-1}`, for i in 1..n.
pub fn common_root_indices<T: Coefficient>(n: usize) -> Result<Vec<usize>, RingError> {
    let ring = make_ring::<T>(2 * n)?;
    let q2 = &q_recurrence::<T>(n - 2) - &IntPolynomial::constant(small(1));
    let q1 = q_recurrence::<T>(n - 1);
    let mut out = Vec::new();
    for i in 1..n {
        // 2cos(iπ/n) = D_{2i}(2cos(π/2n))
        let x = ring.double_cosine(2 * i);
        if eval_in_ring(&q2, &x)?.is_zero() && eval_in_ring(&q1, &x)?.is_zero() {
            out.push(i);
        }
    }
    Ok(out)
}
