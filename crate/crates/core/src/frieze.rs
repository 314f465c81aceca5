//! Frieze patterns generated from a cyclic first row by the diagonal recurrence.
//!
//! Storage is diagonal-major: `E(i, j)` is the i-th element of the diagonal
//! whose row-1 entry is `a_j`, with
//! `E(0, j) = 1`, `E(1, j) = a_j` and `E(i+1, j) = a_{j+i} E(i, j) - E(i-1, j)`.
//! In the staggered table `E(i, j)` sits at half-column `2j + i`.

use std::sync::Arc;

use thiserror::Error;

use crate::cyclo::{make_ring, RingElement, RingError, RingSpec, Sign};
use crate::partition::{PartitionError, PolygonDissection};
use crate::scalar::{small, Coefficient};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError<T: Coefficient> {
    #[error("first row needs at least 3 entries, got {0}")]
    TooShort(usize),
    #[error("diagonal {diagonal} does not close: row {row} is {value}")]
    ClosureFailure {
        /// Column of the diagonal's first-row entry.
        diagonal: usize,
        /// First row where the expected `1, 0` ending fails.
        row: usize,
        value: RingElement<T>,
        /// The whole diagonal, rows `0..=w+2`.
        entries: Vec<RingElement<T>>,
    },
    #[error("row {row} out of range for width {width}")]
    IndexOutOfRange { row: usize, width: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FriezePattern<T: Coefficient> {
    ring: Arc<RingSpec<T>>,
    width: usize,
    /// `diagonals[j][i] = E(i, j)`.
    diagonals: Vec<Vec<RingElement<T>>>,
}

/// Runs the diagonal recurrence over one period and checks closure.
pub fn generate<T: Coefficient>(first_row: &[RingElement<T>]) -> Result<FriezePattern<T>, FriezeError<T>> {
    let m = first_row.len();
    if m < 3 {
        return Err(FriezeError::TooShort(m));
    }
    let ring = first_row[0].spec().clone();
    let width = m - 3;
    let one = ring.one();
    let mut diagonals = Vec::with_capacity(m);
    for j in 0..m {
        let mut diag = Vec::with_capacity(width + 3);
        diag.push(one.clone());
        let mut prev = ring.zero();
        for i in 0..=width + 1 {
            let next = first_row[(j + i) % m].try_mul_sub(&diag[i], &prev)?;
            prev = diag[i].clone();
            diag.push(next);
        }
        let row = if !diag[width + 1].is_one() {
            Some(width + 1)
        } else if !diag[width + 2].is_zero() {
            Some(width + 2)
        } else {
            None
        };
        if let Some(row) = row {
            return Err(FriezeError::ClosureFailure { diagonal: j, row, value: diag[row].clone(), entries: diag });
        }
        diagonals.push(diag);
    }
    Ok(FriezePattern { ring, width, diagonals })
}

/// Ring of the dissection's conductor, vertex weights, then [`generate`].
pub fn build_from_dissection<T: Coefficient>(d: &PolygonDissection) -> Result<FriezePattern<T>, FriezeError<T>> {
    let ring = make_ring::<T>(d.conductor())?;
    let weights = d.vertex_weights(&ring)?;
    generate(&weights)
}

impl<T: Coefficient> FriezePattern<T> {
    pub fn ring(&self) -> &Arc<RingSpec<T>> {
        &self.ring
    }

    /// Period of the first row (the polygon size).
    pub fn m(&self) -> usize {
        self.diagonals.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// `E(i, j)` for `0 <= i <= w + 2`, `j` taken mod m.
    pub fn entry(&self, i: usize, j: usize) -> &RingElement<T> {
        &self.diagonals[j % self.m()][i]
    }

    pub fn first_row(&self) -> Vec<RingElement<T>> {
        self.diagonals.iter().map(|d| d[1].clone()).collect()
    }

    pub fn diagonal(&self, j: usize) -> &[RingElement<T>] {
        &self.diagonals[j % self.m()]
    }

    /// Row `i` (row 0 is the upper row of ones), as `E(i, 0..m)`.
    pub fn row(&self, i: usize) -> Result<Vec<RingElement<T>>, FriezeError<T>> {
        if i > self.width + 2 {
            return Err(FriezeError::IndexOutOfRange { row: i, width: self.width });
        }
        Ok(self.diagonals.iter().map(|d| d[i].clone()).collect())
    }

    /// Overwrites one entry without re-checking anything.
    pub fn replace_entry(&mut self, i: usize, j: usize, value: RingElement<T>) {
        let m = self.m();
        self.diagonals[j % m][i] = value;
    }

    /// First diamond `(i, k)` where `E(i,k) E(i,k+1) - E(i-1,k+1) E(i+1,k) != 1`.
    pub fn unimodular_violation(&self) -> Option<(usize, usize)> {
        let one = self.ring.one();
        for i in 1..=self.width + 1 {
            for k in 0..self.m() {
                let lhs = self.entry(i, k).try_mul(self.entry(i, k + 1));
                let rhs = self.entry(i - 1, k + 1).try_mul(self.entry(i + 1, k));
                let ok = match (lhs, rhs) {
                    (Ok(l), Ok(r)) => l.try_sub(&r).is_ok_and(|d| d == one),
                    _ => false,
                };
                if !ok {
                    return Some((i, k));
                }
            }
        }
        None
    }

    pub fn verify_unimodular(&self) -> bool {
        self.unimodular_violation().is_none()
    }

    /// First interior entry `(i, j)` whose sign is not positive.
    pub fn positivity_violation(&self) -> Option<(usize, usize)> {
        (1..=self.width)
            .flat_map(|i| (0..self.m()).map(move |j| (i, j)))
            .find(|&(i, j)| self.entry(i, j).sign() != Sign::Positive)
    }

    pub fn verify_positive(&self) -> bool {
        self.positivity_violation().is_none()
    }

    /// Signs of the interior rows `1..=w`, indexed `[i - 1][j]`.
    pub fn interior_signs(&self) -> Vec<Vec<Sign>> {
        (1..=self.width)
            .map(|i| (0..self.m()).map(|j| self.entry(i, j).sign()).collect())
            .collect()
    }

    /// Closure rows: `E(w+1, j) = 1` and `E(w+2, j) = 0` everywhere.
    pub fn verify_closure(&self) -> bool {
        self.diagonals.iter().all(|d| d[0].is_one() && d[self.width + 1].is_one() && d[self.width + 2].is_zero())
    }

    fn shifts_by(&self, p: usize, rows: std::ops::RangeInclusive<usize>) -> bool {
        let m = self.m();
        rows.into_iter().all(|i| (0..m).all(|j| self.entry(i, j) == self.entry(i, j + p)))
    }

    /// Smallest `p` with `E(i, j + p) = E(i, j)` for all entries; divides m.
    pub fn pattern_period(&self) -> usize {
        (1..=self.m()).find(|&p| self.shifts_by(p, 0..=self.width + 2)).unwrap()
    }

    pub fn row_period(&self, i: usize) -> usize {
        (1..=self.m()).find(|&p| self.shifts_by(p, i..=i)).unwrap()
    }

    /// True if some first-row entry is strictly less than 2.
    pub fn has_entry_below_two(&self) -> bool {
        let two = self.ring.integer(small(2));
        self.diagonals.iter().any(|d| d[1].try_sub(&two).is_ok_and(|x| x.sign() == Sign::Negative))
    }

    /// All first-row through last-row entries are rational integers.
    pub fn is_integral(&self) -> bool {
        self.diagonals.iter().flatten().all(|e| e.as_integer().is_some())
    }
}
