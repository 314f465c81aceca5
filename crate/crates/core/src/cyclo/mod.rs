//! Exact arithmetic in `Z[c]` with `c = 2cos(π/N)`.
//!
//! Elements are integer coefficient vectors in the power basis
//! `1, c, …, c^{d-1}` and every product is reduced modulo the minimal
//! polynomial of `c`, which is monic, so reduction never leaves the integers.

mod element;
mod render;
mod ring;
mod sign;

pub use element::RingElement;
pub use render::{default_generators, parse_rendered, unicode_generators, Generator, Renderer};
pub use ring::{cyclotomic, euler_phi, make_ring, minimal_polynomial, weight_degree, RingSpec};
pub use sign::Sign;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("conductor must be at least 3, got {0}")]
    InvalidConductor(usize),
    #[error("ring mismatch: conductor {left} vs {right}")]
    SpecMismatch { left: usize, right: usize },
    #[error("part size {n} does not divide the conductor {conductor}")]
    NotDivisor { n: usize, conductor: usize },
    #[error("expected {expected} coefficients, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("integer coefficient overflow")]
    Overflow,
    #[error("cannot parse ring element {text:?}: {reason}")]
    Parse { text: String, reason: String },
}
