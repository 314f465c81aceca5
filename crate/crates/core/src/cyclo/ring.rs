use std::collections::HashMap;
use std::sync::{Arc, OnceLock};


use super::element::RingElement;
use super::sign::Enclosure;
use super::RingError;
use crate::poly::{double_cosine, IntPolynomial};
use crate::scalar::{small, Coefficient};

/// The ring `Z[2cos(π/N)]`.
///
/// Immutable once built; elements hold an `Arc` to their ring.
#[derive(Debug)]
pub struct RingSpec<T> {
    conductor: usize,
    minpoly: IntPolynomial<T>,
    enclosure: OnceLock<Arc<Enclosure>>,
}

pub fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Degree of `2cos(π/n)` over the rationals, `φ(2n)/2`.
pub fn weight_degree(n: usize) -> usize {
    euler_phi(2 * n) / 2
}

/// The n-th cyclotomic polynomial, by exact division of `x^n - 1` by the
/// cyclotomic polynomials of all proper divisors.
pub fn cyclotomic<T: Coefficient>(n: usize) -> IntPolynomial<T> {
    fn go<T: Coefficient>(n: usize, memo: &mut HashMap<usize, IntPolynomial<T>>) -> IntPolynomial<T> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut p = &IntPolynomial::monomial(small(1), n) - &IntPolynomial::one();
        for d in (1..n).filter(|d| n % d == 0) {
            let phi_d = go(d, memo);
            p = p.div_exact_monic(&phi_d).expect("cyclotomic factor divides x^n - 1");
        }
        memo.insert(n, p.clone());
        p
    }
    assert!(n >= 1);
    go(n, &mut HashMap::new())
}

/// Minimal polynomial of `2cos(π/n)`: the palindromic `Φ_{2n}(x)` rewritten
/// in `y = x + 1/x`.
pub fn minimal_polynomial<T: Coefficient>(n: usize) -> IntPolynomial<T> {
    let phi = cyclotomic::<T>(2 * n);
    let deg = phi.degree().unwrap();
    debug_assert!(deg % 2 == 0);
    let half = deg / 2;
    // x^{-half} Φ(x) = a_half + Σ_k a_{half+k} (x^k + x^{-k})
    let mut out = IntPolynomial::constant(phi.coeff(half));
    for k in 1..=half {
        let a = phi.coeff(half + k);
        if !a.is_zero() {
            out = &out + &double_cosine::<T>(k).scale(&a);
        }
    }
    out
}

/// Builds `Z[2cos(π/N)]`.
pub fn make_ring<T: Coefficient>(conductor: usize) -> Result<Arc<RingSpec<T>>, RingError> {
    if conductor < 3 {
        return Err(RingError::InvalidConductor(conductor));
    }
    let minpoly = minimal_polynomial(conductor);
    debug_assert!(minpoly.is_monic());
    Ok(Arc::new(RingSpec { conductor, minpoly, enclosure: OnceLock::new() }))
}

impl<T: Coefficient> RingSpec<T> {
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn minpoly(&self) -> &IntPolynomial<T> {
        &self.minpoly
    }

    /// Rank of the ring as a Z-module.
    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub(crate) fn base_enclosure(&self) -> Arc<Enclosure> {
        self.enclosure
            .get_or_init(|| Arc::new(Enclosure::isolate(&self.minpoly, self.conductor)))
            .clone()
    }

    pub fn zero(self: &Arc<Self>) -> RingElement<T> {
        RingElement::from_raw(self.clone(), vec![T::zero(); self.degree()])
    }

    pub fn one(self: &Arc<Self>) -> RingElement<T> {
        self.integer(small(1))
    }

    pub fn integer(self: &Arc<Self>, v: T) -> RingElement<T> {
        let mut coeffs = vec![T::zero(); self.degree()];
        coeffs[0] = v;
        RingElement::from_raw(self.clone(), coeffs)
    }

    /// The generator `c = 2cos(π/N)`.
    pub fn generator(self: &Arc<Self>) -> RingElement<T> {
        self.reduce(&IntPolynomial::x())
    }

    /// The image of `p(c)` in the ring.
    pub fn reduce(self: &Arc<Self>, p: &IntPolynomial<T>) -> RingElement<T> {
        let (_, r) = p.div_rem_monic(&self.minpoly);
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.degree(), T::zero());
        RingElement::from_raw(self.clone(), coeffs)
    }

    /// `2cos(kπ/N)`.
    pub fn double_cosine(self: &Arc<Self>, k: usize) -> RingElement<T> {
        self.reduce(&double_cosine(k))
    }

    /// Weight of an n-gonal part, `2cos(π/n) = D_{N/n}(c)`. Requires `n | N`,
    /// except for triangles, whose weight 1 lies in every ring.
    pub fn part_weight(self: &Arc<Self>, n: usize) -> Result<RingElement<T>, RingError> {
        if n == 3 {
            return Ok(self.one());
        }
        if n < 3 || self.conductor % n != 0 {
            return Err(RingError::NotDivisor { n, conductor: self.conductor });
        }
        Ok(self.double_cosine(self.conductor / n))
    }

    /// Maps an element of `Z[2cos(π/M)]` into this ring, for `M | N`.
    pub fn embed(self: &Arc<Self>, e: &RingElement<T>) -> Result<RingElement<T>, RingError> {
        let m = e.conductor();
        if self.conductor % m != 0 {
            return Err(RingError::NotDivisor { n: m, conductor: self.conductor });
        }
        let c = self.double_cosine(self.conductor / m);
        let mut acc = self.zero();
        for k in e.coeffs().iter().rev() {
            acc = acc.try_mul(&c)?.try_add(&self.integer(k.clone()))?;
        }
        Ok(acc)
    }

    pub(crate) fn reduce_product(&self, mut prod: Vec<T>) -> Result<Vec<T>, RingError> {
        let d = self.degree();
        let psi = self.minpoly.coeffs();
        for top in (d..prod.len()).rev() {
            let lead = std::mem::replace(&mut prod[top], T::zero());
            if lead.is_zero() {
                continue;
            }
            let shift = top - d;
            for (i, pc) in psi[..d].iter().enumerate() {
                let t = lead.checked_mul(pc).ok_or(RingError::Overflow)?;
                prod[shift + i] = prod[shift + i].checked_sub(&t).ok_or(RingError::Overflow)?;
            }
        }
        prod.truncate(d);
        prod.resize(d, T::zero());
        Ok(prod)
    }
}

impl<T: Coefficient> PartialEq for RingSpec<T> {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl<T: Coefficient> Eq for RingSpec<T> {}
