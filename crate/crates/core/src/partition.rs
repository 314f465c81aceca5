//! Dissections of a convex m-gon by non-crossing diagonals.
//!
//! Vertices are numbered `0..m` counterclockwise. Diagonals are stored as
//! normalized `(min, max)` pairs in a sorted set.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use num_integer::Integer;
use thiserror::Error;

use crate::cyclo::{RingElement, RingError, RingSpec, Sign};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("diagonal #{index} ({a}, {b}): vertex out of range for a {m}-gon")]
    OutOfRange { index: usize, a: usize, b: usize, m: usize },
    #[error("diagonal #{index} ({a}, {b}): endpoints are equal or adjacent")]
    AdjacentEndpoints { index: usize, a: usize, b: usize },
    #[error("diagonal #{index} {second:?} crosses {first:?}")]
    Crossing { index: usize, first: (usize, usize), second: (usize, usize) },
    #[error("diagonal #{index} {diagonal:?} is repeated")]
    Duplicate { index: usize, diagonal: (usize, usize) },
    #[error("part of size {part_size} does not fit the ring with conductor {conductor}")]
    RingMismatch { part_size: usize, conductor: usize },
    #[error("the trivial dissection has no ear")]
    NoEar,
    #[error("weight at vertex {0} is not positive")]
    NonPositiveWeight(usize),
}

impl PartitionError {
    /// Position of the offending diagonal in the input list, if any.
    pub fn diagonal_index(&self) -> Option<usize> {
        match self {
            Self::OutOfRange { index, .. }
            | Self::AdjacentEndpoints { index, .. }
            | Self::Crossing { index, .. }
            | Self::Duplicate { index, .. } => Some(*index),
            _ => None,
        }
    }
}

/// Convex-position crossing test for two normalized diagonals.
pub fn crosses(d1: (usize, usize), d2: (usize, usize)) -> bool {
    let (a, b) = d1;
    let (c, d) = d2;
    if a == c || a == d || b == c || b == d {
        return false;
    }
    let inside = |x: usize| a < x && x < b;
    inside(c) != inside(d)
}

fn normalize((a, b): (usize, usize)) -> (usize, usize) {
    (a.min(b), a.max(b))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct PolygonDissection {
    m: usize,
    diagonals: BTreeSet<(usize, usize)>,
}

/// Validates a dissection; pairs may be given in either order.
pub fn validate(m: usize, diagonals: &[(usize, usize)]) -> Result<PolygonDissection, PartitionError> {
    if m < 3 {
        return Err(PartitionError::TooFewVertices(m));
    }
    let mut seen: Vec<(usize, usize)> = Vec::with_capacity(diagonals.len());
    for (index, &(a, b)) in diagonals.iter().enumerate() {
        if a >= m || b >= m {
            return Err(PartitionError::OutOfRange { index, a, b, m });
        }
        let (lo, hi) = normalize((a, b));
        if hi - lo < 2 || lo + m - hi < 2 {
            return Err(PartitionError::AdjacentEndpoints { index, a, b });
        }
        if seen.contains(&(lo, hi)) {
            return Err(PartitionError::Duplicate { index, diagonal: (lo, hi) });
        }
        if let Some(&first) = seen.iter().find(|&&e| crosses(e, (lo, hi))) {
            return Err(PartitionError::Crossing { index, first, second: (lo, hi) });
        }
        seen.push((lo, hi));
    }
    Ok(PolygonDissection { m, diagonals: seen.into_iter().collect() })
}

/// A polygonal part, vertices in counterclockwise (ascending) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Part {
    vertices: Vec<usize>,
}

impl Part {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Boundary edges as normalized pairs, in cyclic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| normalize((self.vertices[i], self.vertices[(i + 1) % n])))
    }
}

/// The result of cutting an ear off a dissection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarCut {
    /// The ear: a part with exactly one diagonal on its boundary.
    pub part: Part,
    /// The ear's diagonal `(start, end)`, oriented so the ear's polygon edges
    /// run counterclockwise from `start` to `end`.
    pub diagonal: (usize, usize),
    /// The `(m - r + 2)`-gon left after removing the ear's interior vertices.
    pub cut: PolygonDissection,
    /// Original label of each vertex of the cut polygon.
    pub kept: Vec<usize>,
    /// Cut-polygon label of `start`; `end` has label `position + 1 (mod s)`.
    pub position: usize,
}

impl EarCut {
    pub fn ear_size(&self) -> usize {
        self.part.size()
    }

    /// Rotation that aligns the inserted row with the original labels:
    /// index 0 of [`insert_ear_weights`]'s output is original vertex `offset`.
    pub fn offset(&self) -> usize {
        self.kept[0]
    }
}

impl PolygonDissection {
    /// The trivial dissection (no diagonals).
    pub fn trivial(m: usize) -> Result<Self, PartitionError> {
        validate(m, &[])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn diagonals(&self) -> &BTreeSet<(usize, usize)> {
        &self.diagonals
    }

    pub fn diagonal_list(&self) -> Vec<(usize, usize)> {
        self.diagonals.iter().copied().collect()
    }

    pub fn is_diagonal(&self, a: usize, b: usize) -> bool {
        self.diagonals.contains(&normalize((a, b)))
    }

    pub fn is_triangulation(&self) -> bool {
        self.diagonals.len() + 3 == self.m
    }

    /// Splits the polygon along its diagonals into parts, ordered by vertex list.
    pub fn extract_parts(&self) -> Vec<Part> {
        let mut parts = Vec::new();
        let mut stack = vec![(0..self.m).collect::<Vec<usize>>()];
        while let Some(poly) = stack.pop() {
            let n = poly.len();
            let chord = (0..n).find_map(|i| {
                (i + 2..n)
                    .filter(|&j| !(i == 0 && j == n - 1))
                    .find(|&j| self.is_diagonal(poly[i], poly[j]))
                    .map(|j| (i, j))
            });
            match chord {
                Some((i, j)) => {
                    stack.push(poly[i..=j].to_vec());
                    let mut rest = poly[..=i].to_vec();
                    rest.extend_from_slice(&poly[j..]);
                    stack.push(rest);
                }
                None => parts.push(Part { vertices: poly }),
            }
        }
        parts.sort();
        parts
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.extract_parts().iter().map(Part::size).collect()
    }

    /// Least common multiple of the part sizes: the conductor of the weight ring.
    pub fn conductor(&self) -> usize {
        self.part_sizes().into_iter().fold(1, |acc, n| acc.lcm(&n))
    }

    fn boundary_diagonals(&self, part: &Part) -> usize {
        part.edges().filter(|&(a, b)| self.is_diagonal(a, b)).count()
    }

    /// Finds an ear (ties broken by smallest lowest vertex) and the cut polygon.
    pub fn find_ear_part(&self) -> Result<EarCut, PartitionError> {
        if self.diagonals.is_empty() {
            return Err(PartitionError::NoEar);
        }
        let part = self
            .extract_parts()
            .into_iter()
            .filter(|p| self.boundary_diagonals(p) == 1)
            .min_by_key(|p| p.vertices[0])
            .expect("every non-trivial dissection has an ear");
        let n = part.size();
        // The diagonal hop x -> y; the rest of the boundary runs y, y+1, ..., x.
        let (end, start) = (0..n)
            .map(|i| (part.vertices[i], part.vertices[(i + 1) % n]))
            .find(|&(x, y)| self.is_diagonal(x, y))
            .unwrap();
        let interior: Vec<usize> = (1..n - 1).map(|k| (start + k) % self.m).collect();
        let kept: Vec<usize> = (0..self.m).filter(|v| !interior.contains(v)).collect();
        let label = |v: usize| kept.binary_search(&v).unwrap();
        let ear_diag = normalize((start, end));
        let induced: Vec<(usize, usize)> = self
            .diagonals
            .iter()
            .filter(|&&d| d != ear_diag)
            .map(|&(a, b)| (label(a), label(b)))
            .collect();
        let cut = validate(kept.len(), &induced).expect("induced dissection is valid");
        let position = label(start);
        debug_assert_eq!(label(end), (position + 1) % kept.len());
        Ok(EarCut { part, diagonal: (start, end), cut, kept, position })
    }

    /// Relabels vertex `v` as `v + k (mod m)`.
    pub fn rotate(&self, k: usize) -> Self {
        let diags: Vec<_> = self.diagonals.iter().map(|&(a, b)| ((a + k) % self.m, (b + k) % self.m)).collect();
        validate(self.m, &diags).unwrap()
    }

    /// Relabels vertex `v` as `m - 1 - v`.
    pub fn reflect(&self) -> Self {
        let diags: Vec<_> = self.diagonals.iter().map(|&(a, b)| (self.m - 1 - a, self.m - 1 - b)).collect();
        validate(self.m, &diags).unwrap()
    }

    /// Vertex weights: the sum of `2cos(π/n)` over the parts at each vertex.
    pub fn vertex_weights<T: Coefficient>(
        &self,
        ring: &Arc<RingSpec<T>>,
    ) -> Result<WeightSequence<T>, PartitionError> {
        let mut entries = vec![ring.zero(); self.m];
        for part in self.extract_parts() {
            let w = ring.part_weight(part.size()).map_err(|_| PartitionError::RingMismatch {
                part_size: part.size(),
                conductor: ring.conductor(),
            })?;
            for &v in part.vertices() {
                entries[v] = &entries[v] + &w;
            }
        }
        WeightSequence::new(entries)
    }
}

impl fmt::Display for PolygonDissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.m)?;
        for (i, (a, b)) in self.diagonals.iter().enumerate() {
            write!(f, "{} {a}-{b}", if i == 0 { "" } else { "," })?;
        }
        Ok(())
    }
}

/// The cyclic first row of weights, all strictly positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSequence<T: Coefficient> {
    entries: Vec<RingElement<T>>,
}

impl<T: Coefficient> WeightSequence<T> {
    pub fn new(entries: Vec<RingElement<T>>) -> Result<Self, PartitionError> {
        if let Some(v) = entries.iter().position(|e| e.sign() != Sign::Positive) {
            return Err(PartitionError::NonPositiveWeight(v));
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[RingElement<T>] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<RingElement<T>> {
        self.entries
    }
}

impl<T: Coefficient> Deref for WeightSequence<T> {
    type Target = [RingElement<T>];
    fn deref(&self) -> &Self::Target {
        &self.entries
    }
}

/// Builds the first row of the uncut polygon from the cut polygon's row:
/// `a_i, a_{i+1}` becomes `a_i + t, t, …, t (r - 2 times), a_{i+1} + t`.
///
/// Output index 0 corresponds to the cut polygon's vertex 0.
pub fn insert_ear_weights<T: Coefficient>(
    cut_row: &[RingElement<T>],
    position: usize,
    weight: &RingElement<T>,
    ear_size: usize,
) -> Result<Vec<RingElement<T>>, RingError> {
    let s = cut_row.len();
    assert!(position < s && ear_size >= 3);
    let mut row = cut_row.to_vec();
    let next = (position + 1) % s;
    row[position] = row[position].try_add(weight)?;
    row[next] = row[next].try_add(weight)?;
    let filler = std::iter::repeat(weight.clone()).take(ear_size - 2);
    if next == 0 {
        row.extend(filler);
    } else {
        row.splice(next..next, filler);
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::make_ring;

    fn d(m: usize, diags: &[(usize, usize)]) -> PolygonDissection {
        validate(m, diags).unwrap()
    }

    fn sizes(p: &PolygonDissection) -> Vec<usize> {
        let mut s = p.part_sizes();
        s.sort();
        s
    }

    #[test]
    fn validation() {
        assert_eq!(d(5, &[(0, 2), (3, 0)]).diagonal_list(), vec![(0, 2), (0, 3)]);
        assert!(validate(5, &[]).is_ok());
        assert!(validate(3, &[]).is_ok());
        assert_eq!(validate(2, &[]), Err(PartitionError::TooFewVertices(2)));
        assert_eq!(
            validate(6, &[(0, 2), (1, 3)]),
            Err(PartitionError::Crossing { index: 1, first: (0, 2), second: (1, 3) })
        );
        assert!(matches!(validate(5, &[(0, 5)]), Err(PartitionError::OutOfRange { index: 0, .. })));
        assert!(matches!(validate(5, &[(0, 1)]), Err(PartitionError::AdjacentEndpoints { .. })));
        assert!(matches!(validate(5, &[(0, 4)]), Err(PartitionError::AdjacentEndpoints { .. })));
        assert!(matches!(validate(5, &[(2, 2)]), Err(PartitionError::AdjacentEndpoints { .. })));
        assert!(matches!(
            validate(6, &[(0, 3), (3, 0)]),
            Err(PartitionError::Duplicate { index: 1, diagonal: (0, 3) })
        ));
    }

    #[test]
    fn crossing_rule() {
        assert!(crosses((0, 2), (1, 3)));
        assert!(!crosses((0, 2), (2, 4)));
        assert!(!crosses((0, 3), (4, 6)));
        assert!(crosses((1, 5), (0, 3)));
    }

    #[test]
    fn part_sizes() {
        assert_eq!(sizes(&d(5, &[(0, 2), (2, 4)])), [3, 3, 3]);
        assert_eq!(sizes(&d(5, &[(0, 2)])), [3, 4]);
        assert_eq!(sizes(&d(8, &[(0, 3), (3, 7)])), [3, 4, 5]);
        assert_eq!(sizes(&d(8, &[(0, 2), (2, 7), (2, 6)])), [3, 3, 3, 5]);
        assert_eq!(sizes(&d(7, &[])), [7]);
    }

    #[test]
    fn parts_tile_the_polygon() {
        let p = d(9, &[(0, 4), (4, 8), (1, 3), (5, 7)]);
        let mut count = std::collections::HashMap::new();
        for part in p.extract_parts() {
            for e in part.edges() {
                *count.entry(e).or_insert(0) += 1;
            }
        }
        for v in 0..9 {
            assert_eq!(count[&normalize((v, (v + 1) % 9))], 1);
        }
        for diag in p.diagonals() {
            assert_eq!(count[diag], 2);
        }
        assert_eq!(count.len(), 9 + p.diagonals().len());
    }

    #[test]
    fn weights_of_pentagon_with_quadrangle() {
        let ring = make_ring::<i64>(4).unwrap();
        let one = ring.one();
        let s = ring.generator();
        let w = d(5, &[(0, 2)]).vertex_weights(&ring).unwrap();
        let sp1 = &s + &one;
        assert_eq!(w.entries(), &[sp1.clone(), one, sp1, s.clone(), s]);
    }

    #[test]
    fn trivial_weights_are_constant() {
        let ring = make_ring::<i64>(7).unwrap();
        let w = PolygonDissection::trivial(7).unwrap().vertex_weights(&ring).unwrap();
        assert!(w.iter().all(|e| *e == ring.generator()));
    }

    #[test]
    fn ring_mismatch() {
        let ring = make_ring::<i64>(4).unwrap();
        assert_eq!(
            d(8, &[(0, 3), (3, 7)]).vertex_weights(&ring).unwrap_err(),
            PartitionError::RingMismatch { part_size: 5, conductor: 4 }
        );
    }

    #[test]
    fn ears() {
        let e = d(5, &[(0, 2)]).find_ear_part().unwrap();
        assert_eq!(e.part.vertices(), &[0, 1, 2]);
        assert_eq!(e.diagonal, (0, 2));
        assert_eq!(e.kept, vec![0, 2, 3, 4]);
        assert_eq!(e.position, 0);
        assert_eq!(e.cut.m(), 4);

        // The triangle of the golden octagon borders both diagonals.
        let oct = d(8, &[(0, 3), (3, 7)]);
        let tri = oct.extract_parts().into_iter().find(|p| p.size() == 3).unwrap();
        assert_eq!(oct.boundary_diagonals(&tri), 2);
        let e = oct.find_ear_part().unwrap();
        assert_eq!(e.part.vertices(), &[0, 1, 2, 3]);

        let fan = d(6, &[(0, 2), (0, 3), (0, 4)]).find_ear_part().unwrap();
        assert_eq!(fan.part.vertices(), &[0, 1, 2]);
        assert_eq!(PolygonDissection::trivial(5).unwrap().find_ear_part(), Err(PartitionError::NoEar));
    }

    #[test]
    fn ear_through_vertex_zero() {
        let p = d(6, &[(1, 5)]);
        let e = p.find_ear_part().unwrap();
        assert_eq!(e.part.vertices(), &[0, 1, 5]);
        assert_eq!(e.diagonal, (5, 1));
        assert_eq!(e.kept, vec![1, 2, 3, 4, 5]);
        assert_eq!(e.position, 4);
        assert_eq!(e.offset(), 1);
    }

    #[test]
    fn insertion_reproduces_weights() {
        let p = d(8, &[(0, 3), (3, 7)]);
        let ring = make_ring::<i64>(p.conductor()).unwrap();
        let e = p.find_ear_part().unwrap();
        let cut = e.cut.vertex_weights(&ring).unwrap();
        let t = ring.part_weight(e.ear_size()).unwrap();
        let row = insert_ear_weights(&cut, e.position, &t, e.ear_size()).unwrap();
        let mut orig = p.vertex_weights(&ring).unwrap().into_entries();
        orig.rotate_left(e.offset());
        assert_eq!(row, orig);
    }

    #[test]
    fn conductor_is_lcm() {
        assert_eq!(d(8, &[(0, 3), (3, 7)]).conductor(), 60);
        assert_eq!(d(6, &[(0, 2), (0, 3), (0, 4)]).conductor(), 3);
        assert_eq!(PolygonDissection::trivial(4).unwrap().conductor(), 4);
    }
}
