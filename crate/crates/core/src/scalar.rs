//! Integer coefficient types usable by the exact ring and polynomial code.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed};

/// An exact integer scalar.
///
/// Implemented for every signed integer type that supports checked arithmetic
/// and lossless conversion to [`BigInt`]: `i64`, `i128` and `BigInt` itself.
/// Fixed-width types report overflow as an error instead of wrapping.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + From<i32>
    + Into<BigInt>
    + Send
    + Sync
    + 'static
{
    fn to_bigint(&self) -> BigInt {
        self.clone().into()
    }

    /// Narrowing conversion; `None` if the value does not fit.
    fn from_bigint(value: &BigInt) -> Option<Self>;
}

impl Coefficient for i64 {
    fn from_bigint(value: &BigInt) -> Option<Self> {
        i64::try_from(value).ok()
    }
}

impl Coefficient for i128 {
    fn from_bigint(value: &BigInt) -> Option<Self> {
        i128::try_from(value).ok()
    }
}

impl Coefficient for BigInt {
    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
}

pub(crate) fn small<T: Coefficient>(v: i32) -> T {
    T::from(v)
}
