//! Checked exact arithmetic over any [`Scalar`].

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Exact integer type the bounds are computed in: `i64`, `i128`, `BigInt`.
pub trait Scalar:
    Clone
    + Ord
    + Debug
    + Display
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
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
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + Send
        + Sync
        + 'static
{
}

fn overflow() -> Error {
    Error::TooLarge("bound arithmetic overflowed the scalar type".into())
}

pub(crate) fn lit<T: Scalar>(x: u64) -> Result<T> {
    T::from_u64(x).ok_or_else(overflow)
}

pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or_else(overflow)
}

pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or_else(overflow)
}

pub(crate) fn pow<T: Scalar>(base: &T, e: u64) -> Result<T> {
    let mut acc = T::one();
    for _ in 0..e {
        acc = mul(&acc, base)?;
    }
    Ok(acc)
}

/// `C(n, k)`, zero when `k > n`.
pub(crate) fn binom<T: Scalar>(n: u64, k: u64) -> Result<T> {
    if k > n {
        return Ok(T::zero());
    }
    let k = k.min(n - k);
    let mut c = T::one();
    for i in 0..k {
        c = mul(&c, &lit(n - i)?)? / lit(i + 1)?;
    }
    Ok(c)
}

pub(crate) fn factorial<T: Scalar>(n: u64) -> Result<T> {
    (1..=n).try_fold(T::one(), |acc, i| mul(&acc, &lit(i)?))
}

/// `⌊a / b⌋` for `b > 0`.
pub(crate) fn floor_div<T: Scalar>(a: &T, b: &T) -> T {
    a.div_floor(b)
}

/// `⌈a / b⌉` for `b > 0`.
pub(crate) fn ceil_div<T: Scalar>(a: &T, b: &T) -> T {
    -((-a.clone()).div_floor(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn binomials_agree_across_scalars() {
        assert_eq!(binom::<i64>(13, 4).unwrap(), 715);
        assert_eq!(binom::<i128>(60, 30).unwrap(), 118_264_581_564_861_424);
        assert_eq!(binom::<BigInt>(200, 100).unwrap().to_string().len(), 59);
        assert_eq!(binom::<i64>(3, 5).unwrap(), 0);
    }

    #[test]
    fn overflow_is_an_error() {
        assert!(matches!(binom::<i64>(200, 100), Err(Error::TooLarge(_))));
    }

    #[test]
    fn rounding() {
        assert_eq!(ceil_div(&7i64, &2), 4);
        assert_eq!(floor_div(&7i64, &2), 3);
        assert_eq!(ceil_div(&6i64, &2), 3);
    }
}
