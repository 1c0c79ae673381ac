//! Exact scalar fields used for stability parameters and linear algebra.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num::bigint::BigInt;
use num::rational::Ratio;
use num::traits::{FromPrimitive, Num, Signed, ToPrimitive};
use num::{BigRational, Integer, One, Zero};

/// An exact ordered field with a lossless view as a ratio of big integers.
pub trait Scalar:
    Clone + Num + Signed + Ord + Hash + Debug + Display + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;
    fn to_big_ratio(&self) -> BigRational;
    /// Returns `None` when the value does not fit this representation.
    fn from_big_ratio(q: &BigRational) -> Option<Self>;

    fn from_frac(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + Hash + Debug + Display + Send + Sync + 'static,
    T: FromPrimitive + ToPrimitive + Into<BigInt>,
    Ratio<T>: Ord,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_integer(T::from_i64(n).expect("integer does not fit scalar"))
    }

    fn to_big_ratio(&self) -> BigRational {
        BigRational::new(self.numer().clone().into(), self.denom().clone().into())
    }

    fn from_big_ratio(q: &BigRational) -> Option<Self> {
        let n = T::from_i128(q.numer().to_i128()?)?;
        let d = T::from_i128(q.denom().to_i128()?)?;
        Some(Ratio::new(n, d))
    }
}

/// Formats a rational as `p` or `p/q` in lowest terms.
pub fn format_ratio<T: Scalar>(x: &T) -> String {
    let q = x.to_big_ratio();
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q`; the result is reduced.
pub fn parse_ratio(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
    }
}

/// Lowest common multiple of the denominators.
pub fn common_denominator<T: Scalar>(xs: &[T]) -> BigInt {
    xs.iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.to_big_ratio().denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::Rational64;

    #[test]
    fn ratio_strings() {
        let q = Rational64::new(-6, 4);
        assert_eq!(format_ratio(&q), "-3/2");
        assert_eq!(format_ratio(&Rational64::from_int(5)), "5");
        assert_eq!(parse_ratio("-3/2").unwrap(), q.to_big_ratio());
        assert_eq!(parse_ratio("4/-8").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(parse_ratio("1/0").is_none());
        assert!(parse_ratio("x").is_none());
    }

    #[test]
    fn conversions() {
        let q = BigRational::new(7.into(), 3.into());
        let small: Rational64 = Scalar::from_big_ratio(&q).unwrap();
        assert_eq!(small, Rational64::new(7, 3));
        let huge = BigRational::from_integer(BigInt::from(1) << 100);
        assert!(<Rational64 as Scalar>::from_big_ratio(&huge).is_none());
        assert_eq!(common_denominator(&[Rational64::new(1, 4), Rational64::new(1, 6)]), 12.into());
    }
}
