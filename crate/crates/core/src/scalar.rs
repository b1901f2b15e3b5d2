use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Exact signed integer type used for denominators and expanded values.
///
/// Implemented for every type with checked arithmetic, which covers
/// `BigInt`, `i64` and `i128`.
pub trait Scalar:
    Clone
    + Ord
    + Debug
    + Display
    + FromStr
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + FromStr
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn from_u64<T: Scalar>(v: u64) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow)
}

/// `digit * q`, the term every dot product is built from.
pub(crate) fn scale<T: Scalar>(digit: u64, q: &T) -> Result<T> {
    mul(&from_u64::<T>(digit)?, q)
}

pub(crate) fn to_u64<T: Scalar>(v: &T) -> Result<u64> {
    v.to_u64().ok_or(Error::Overflow)
}
