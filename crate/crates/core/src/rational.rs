//! Exact rational scalars and the integer helpers shared by the series and
//! recursion code.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact fraction over unbounded integers, always kept in lowest terms with
/// a positive denominator.
pub type Rational = BigRational;

/// Shorthand for the rational `numer / denom`.
///
/// Panics if `denom` is zero.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `C(n, k)` by the multiplicative formula; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        // acc * (n - j) is always divisible by (j + 1) at this point
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// `base^exp` for a rational base.
pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// Renders a rational as `p/q`, including `/1` for integers, so every
/// value in emitted data has one shape.
pub struct PQ<'a>(pub &'a Rational);

impl fmt::Display for PQ<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

pub fn to_pq(value: &Rational) -> String {
    PQ(value).to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `p/q` or a bare integer `p`. The result is canonicalized, so
/// `2/4` and `1/2` parse to the same value; a zero denominator is rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (text, "1"),
    };
    let numer = BigInt::from_str(numer).map_err(|_| err())?;
    let denom = BigInt::from_str(denom).map_err(|_| err())?;
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(numer, denom))
}

/// True when the stored representation is already in lowest terms with a
/// positive denominator.
pub fn is_canonical(value: &Rational) -> bool {
    use num_integer::Integer;
    value.denom().is_positive() && value.numer().gcd(value.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 1), BigInt::from(3));
        assert_eq!(binomial(19, 9), BigInt::from(92378));
        assert_eq!(binomial(4, 0), BigInt::one());
        assert_eq!(binomial(2, 3), BigInt::zero());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(6), BigInt::from(720));
    }

    #[test]
    fn pq_rendering_and_parsing() {
        assert_eq!(to_pq(&rat(15, 16)), "15/16");
        assert_eq!(to_pq(&int(6)), "6/1");
        assert_eq!(to_pq(&rat(-2, 4)), "-1/2");
        assert_eq!(to_pq(&Rational::zero()), "0/1");
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn canonical_form() {
        assert!(is_canonical(&rat(6, -4)));
        assert_eq!(rat(6, -4), rat(-3, 2));
    }
}
