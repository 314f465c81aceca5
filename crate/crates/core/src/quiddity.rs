//! Integer friezes: triangulation quiddities and their reconstruction.

use thiserror::Error;

use crate::partition::{validate, PolygonDissection};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiddityError {
    #[error("dissection has a part of size {0}; not a triangulation")]
    NotATriangulation(usize),
    #[error("not a quiddity sequence: {0}")]
    NotAQuiddity(String),
}

/// Number of triangles at each vertex of a triangulation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuidditySequence(pub Vec<u64>);

impl QuidditySequence {
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Equal up to rotation.
    pub fn equals_rotated(&self, other: &Self) -> bool {
        let n = self.len();
        n == other.len() && (0..n.max(1)).any(|r| (0..n).all(|i| self.0[(i + r) % n] == other.0[i]))
    }
}

pub fn cc_weights(d: &PolygonDissection) -> Result<QuidditySequence, QuiddityError> {
    let mut q = vec![0u64; d.m()];
    for part in d.extract_parts() {
        if part.size() != 3 {
            return Err(QuiddityError::NotATriangulation(part.size()));
        }
        for &v in part.vertices() {
            q[v] += 1;
        }
    }
    Ok(QuidditySequence(q))
}

/// Rebuilds a triangulation from its quiddity by repeatedly cutting off a
/// vertex with entry 1 (lowest index first).
pub fn reconstruct(q: &QuidditySequence) -> Result<PolygonDissection, QuiddityError> {
    let m = q.len();
    if m < 3 {
        return Err(QuiddityError::NotAQuiddity(format!("length {m} is below 3")));
    }
    if let Some(i) = q.0.iter().position(|&v| v == 0) {
        return Err(QuiddityError::NotAQuiddity(format!("entry {i} is zero")));
    }
    // (original label, remaining count)
    let mut verts: Vec<(usize, u64)> = q.0.iter().copied().enumerate().collect();
    let mut diagonals = Vec::with_capacity(m - 3);
    while verts.len() > 3 {
        let n = verts.len();
        let Some(i) = verts.iter().position(|&(_, v)| v == 1) else {
            return Err(QuiddityError::NotAQuiddity(format!("no entry equals 1 with {n} vertices left")));
        };
        let (prev, next) = ((i + n - 1) % n, (i + 1) % n);
        for k in [prev, next] {
            if verts[k].1 < 2 {
                return Err(QuiddityError::NotAQuiddity(format!(
                    "vertex {} would drop below 1",
                    verts[k].0
                )));
            }
            verts[k].1 -= 1;
        }
        diagonals.push((verts[prev].0, verts[next].0));
        verts.remove(i);
    }
    if verts.iter().any(|&(_, v)| v != 1) {
        let rest: Vec<u64> = verts.iter().map(|&(_, v)| v).collect();
        return Err(QuiddityError::NotAQuiddity(format!("final triangle has counts {rest:?}")));
    }
    validate(m, &diagonals).map_err(|e| QuiddityError::NotAQuiddity(e.to_string()))
}

/// `reconstruct(cc_weights(d))` has the same quiddity as `d`.
pub fn round_trip_check(d: &PolygonDissection) -> bool {
    let Ok(q) = cc_weights(d) else { return false };
    reconstruct(&q).ok().and_then(|t| cc_weights(&t).ok()).is_some_and(|r| r == q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[u64]) -> QuidditySequence {
        QuidditySequence(v.to_vec())
    }

    #[test]
    fn triangle() {
        let t = validate(3, &[]).unwrap();
        assert_eq!(cc_weights(&t).unwrap(), q(&[1, 1, 1]));
        assert_eq!(reconstruct(&q(&[1, 1, 1])).unwrap(), t);
    }

    #[test]
    fn pentagon_fan() {
        let p = validate(5, &[(0, 2), (0, 3)]).unwrap();
        let w = cc_weights(&p).unwrap();
        assert_eq!(w, q(&[3, 1, 2, 2, 1]));
        assert_eq!(w.sum(), 9);
        assert!(round_trip_check(&p));
    }

    #[test]
    fn hexagon_of_the_width_three_example() {
        let h = reconstruct(&q(&[1, 3, 2, 1, 3, 2])).unwrap();
        assert!(h.is_triangulation());
        assert_eq!(cc_weights(&h).unwrap(), q(&[1, 3, 2, 1, 3, 2]));
    }

    #[test]
    fn rejects_non_quiddities() {
        assert!(matches!(reconstruct(&q(&[2, 2, 2, 2])), Err(QuiddityError::NotAQuiddity(_))));
        // A 5-window of the hexagon row, not a pentagon quiddity.
        assert!(reconstruct(&q(&[2, 1, 3, 2, 1])).is_err());
        assert!(reconstruct(&q(&[1, 1, 1, 1])).is_err());
        assert!(reconstruct(&q(&[1, 2])).is_err());
        assert!(reconstruct(&q(&[0, 1, 1])).is_err());
        assert!(reconstruct(&q(&[1, 1, 2])).is_err());
    }

    #[test]
    fn not_a_triangulation() {
        let p = validate(5, &[(0, 2)]).unwrap();
        assert_eq!(cc_weights(&p), Err(QuiddityError::NotATriangulation(4)));
        assert!(!round_trip_check(&p));
    }

    #[test]
    fn nonagon_fan() {
        let fan = validate(9, &(2..=7).map(|k| (0, k)).collect::<Vec<_>>()).unwrap();
        let w = cc_weights(&fan).unwrap();
        assert!(w.equals_rotated(&q(&[7, 1, 2, 2, 2, 2, 2, 2, 1])));
        assert!(round_trip_check(&fan));
    }
}
