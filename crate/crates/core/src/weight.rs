//! Exact nonnegative weights extended with `+inf`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Index};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Parses `p/q`, an integer, or a finite decimal such as `0.125` into an
/// exact rational. Decimals are converted with a power-of-ten denominator.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidWeight(s.to_string());
    let s = s.trim();
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let negative = int.starts_with('-');
        let digits = int.trim_start_matches(['-', '+']);
        if (digits.is_empty() && frac.is_empty())
            || !digits.chars().all(|c| c.is_ascii_digit())
            || !frac.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad());
        }
        let mantissa: BigInt = format!("{}{}", if digits.is_empty() { "0" } else { digits }, frac)
            .parse()
            .map_err(|_| bad())?;
        let denom = num_traits::pow(BigInt::from(10u32), frac.len());
        let r = BigRational::new(mantissa, denom);
        return Ok(if negative { -r } else { r });
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(p))
}

/// A nonnegative rational or `+inf`.
///
/// Ordering is total with `Infinite` above every finite value, and addition
/// saturates at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtWeight {
    Finite(BigRational),
    Infinite,
}

impl ExtWeight {
    pub fn zero() -> Self {
        ExtWeight::Finite(BigRational::zero())
    }

    pub fn infinity() -> Self {
        ExtWeight::Infinite
    }

    /// Fails on negative input.
    pub fn finite(value: BigRational) -> Result<Self> {
        if value.is_negative() {
            return Err(Error::NegativeWeight(value.to_string()));
        }
        Ok(ExtWeight::Finite(value))
    }

    /// Panics if the ratio is negative or `den` is zero. Intended for literals.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::finite(BigRational::new(num.into(), den.into())).expect("nonnegative ratio")
    }

    pub fn integer(value: u64) -> Self {
        ExtWeight::Finite(BigRational::from_integer(value.into()))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtWeight::Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtWeight::Finite(r) if r.is_zero())
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtWeight::Finite(r) => Some(r),
            ExtWeight::Infinite => None,
        }
    }

    pub fn into_finite(self) -> Option<BigRational> {
        match self {
            ExtWeight::Finite(r) => Some(r),
            ExtWeight::Infinite => None,
        }
    }

    /// `|self - other|`, infinite when exactly one side is infinite.
    /// Two infinities also give infinity.
    pub fn abs_diff(&self, other: &Self) -> Self {
        match (self, other) {
            (ExtWeight::Finite(a), ExtWeight::Finite(b)) => ExtWeight::Finite((a - b).abs()),
            _ => ExtWeight::Infinite,
        }
    }

    /// Strictly below a finite rational threshold.
    pub fn lt_rational(&self, bound: &BigRational) -> bool {
        matches!(self, ExtWeight::Finite(r) if r < bound)
    }
}

impl Default for ExtWeight {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<BigRational> for ExtWeight {
    /// Panics on negative input; use [`ExtWeight::finite`] for fallible conversion.
    fn from(value: BigRational) -> Self {
        ExtWeight::finite(value).expect("nonnegative weight")
    }
}

impl Add<&ExtWeight> for &ExtWeight {
    type Output = ExtWeight;

    fn add(self, rhs: &ExtWeight) -> ExtWeight {
        match (self, rhs) {
            (ExtWeight::Finite(a), ExtWeight::Finite(b)) => ExtWeight::Finite(a + b),
            _ => ExtWeight::Infinite,
        }
    }
}

impl Add for ExtWeight {
    type Output = ExtWeight;

    fn add(self, rhs: ExtWeight) -> ExtWeight {
        &self + &rhs
    }
}

impl AddAssign<&ExtWeight> for ExtWeight {
    fn add_assign(&mut self, rhs: &ExtWeight) {
        match (&mut *self, rhs) {
            (ExtWeight::Finite(a), ExtWeight::Finite(b)) => *a += b,
            _ => *self = ExtWeight::Infinite,
        }
    }
}

impl<'a> Sum<&'a ExtWeight> for ExtWeight {
    fn sum<I: Iterator<Item = &'a ExtWeight>>(iter: I) -> Self {
        let mut total = ExtWeight::zero();
        for w in iter {
            total += w;
        }
        total
    }
}

impl PartialEq<BigRational> for ExtWeight {
    fn eq(&self, other: &BigRational) -> bool {
        self.as_finite() == Some(other)
    }
}

impl PartialOrd<BigRational> for ExtWeight {
    fn partial_cmp(&self, other: &BigRational) -> Option<Ordering> {
        Some(match self {
            ExtWeight::Finite(r) => r.cmp(other),
            ExtWeight::Infinite => Ordering::Greater,
        })
    }
}

impl fmt::Display for ExtWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtWeight::Finite(r) => write!(f, "{r}"),
            ExtWeight::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(ExtWeight::Infinite),
            other => ExtWeight::finite(parse_rational(other)?),
        }
    }
}

/// Per-edge weights, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Weights(Vec<ExtWeight>);

impl Weights {
    pub fn new(values: Vec<ExtWeight>) -> Self {
        Weights(values)
    }

    pub fn uniform(len: usize, value: ExtWeight) -> Self {
        Weights(vec![value; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ExtWeight> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[ExtWeight] {
        &self.0
    }

    /// Componentwise minimum.
    pub fn min_with(&self, other: &Weights) -> Weights {
        Weights(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        )
    }

    pub(crate) fn check_len(&self, edges: usize) -> Result<()> {
        if self.0.len() != edges {
            return Err(Error::WeightLength {
                expected: edges,
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for Weights {
    type Output = ExtWeight;

    fn index(&self, index: usize) -> &ExtWeight {
        &self.0[index]
    }
}

impl FromIterator<ExtWeight> for Weights {
    fn from_iter<I: IntoIterator<Item = ExtWeight>>(iter: I) -> Self {
        Weights(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Weights {
    type Item = &'a ExtWeight;
    type IntoIter = std::slice::Iter<'a, ExtWeight>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_all_literal_forms() {
        assert_eq!(parse_rational("7/3").unwrap(), q(7, 3));
        assert_eq!(parse_rational("6/4").unwrap(), q(3, 2));
        assert_eq!(parse_rational("5").unwrap(), q(5, 1));
        assert_eq!(parse_rational("0.125").unwrap(), q(1, 8));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert_eq!(parse_rational("2.").unwrap(), q(2, 1));
        assert_eq!(parse_rational("-0.5").unwrap(), q(-1, 2));
        for bad in ["", "1/0", "a", "1.2.3", "1/x", ".", "1e3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn infinity_saturates_and_orders_last() {
        let a = ExtWeight::ratio(3, 2);
        assert_eq!(&a + &ExtWeight::Infinite, ExtWeight::Infinite);
        assert!(ExtWeight::Infinite > ExtWeight::ratio(1_000_000, 1));
        assert!(ExtWeight::zero() < a);
        assert_eq!("inf".parse::<ExtWeight>().unwrap(), ExtWeight::Infinite);
        assert_eq!(ExtWeight::Infinite.to_string(), "inf");
        assert_eq!(ExtWeight::ratio(6, 4).to_string(), "3/2");
    }

    #[test]
    fn rejects_negative() {
        assert!(ExtWeight::finite(q(-1, 3)).is_err());
        assert!("-1/3".parse::<ExtWeight>().is_err());
    }

    #[test]
    fn abs_diff_with_infinity() {
        assert_eq!(
            ExtWeight::ratio(1, 2).abs_diff(&ExtWeight::ratio(3, 4)),
            ExtWeight::ratio(1, 4)
        );
        assert!(ExtWeight::ratio(1, 2).abs_diff(&ExtWeight::Infinite).is_infinite());
    }
}
