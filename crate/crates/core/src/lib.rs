//! Frieze patterns from dissections of convex polygons, computed exactly.
//!
//! A dissection of a convex m-gon by non-crossing diagonals assigns each
//! n-gonal part the weight `2cos(π/n)`; summing part weights around each
//! vertex gives the first row of a frieze of width `m - 3`. All entries are
//! computed in `Z[2cos(π/N)]`, N the lcm of the part sizes.
//!
//! The core is generic over the integer coefficient type ([`Coefficient`]);
//! the aliases below fix it to [`BigInt`].

pub mod census;
pub mod cyclo;
pub mod document;
pub mod frieze;
pub mod output;
pub mod partition;
pub mod poly;
pub mod qpoly;
pub mod quiddity;
pub mod scalar;

pub use num_bigint::BigInt;
pub use scalar::Coefficient;

pub use cyclo::{make_ring, Generator, RingError, Sign};
pub use frieze::{build_from_dissection, generate, FriezeError};
pub use partition::{validate, Part, PartitionError, PolygonDissection};

/// Ring of arbitrary-precision coefficients.
pub type Ring = std::sync::Arc<cyclo::RingSpec<BigInt>>;
pub type Element = cyclo::RingElement<BigInt>;
pub type Polynomial = poly::IntPolynomial<BigInt>;
pub type Frieze = frieze::FriezePattern<BigInt>;
pub type Weights = partition::WeightSequence<BigInt>;
pub type Renderer = cyclo::Renderer<BigInt>;

/// Fixed-width variants; arithmetic reports overflow as [`RingError::Overflow`].
pub type Ring64 = std::sync::Arc<cyclo::RingSpec<i64>>;
pub type Element64 = cyclo::RingElement<i64>;
pub type Frieze64 = frieze::FriezePattern<i64>;
