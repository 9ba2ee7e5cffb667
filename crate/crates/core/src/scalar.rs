//! Exact rational scalars and the integer combinatorics used throughout.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n (n-1) ... (n-k+1)`, which is zero whenever `k > n`.
pub fn falling(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (n - k + 1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    falling(n, k) / factorial(k)
}

/// Parses `"p"` or `"p/q"` (optionally signed) into a reduced rational.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::BadRational(text.to_string()));
    }
    t.parse::<Scalar>()
        .map_err(|_| Error::BadRational(text.to_string()))
}

/// Formats as `"p"` for integers and `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn sign_pow(k: usize) -> Scalar {
    if k % 2 == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::from(0));
        assert_eq!(falling(5, 0), BigInt::from(1));
        assert_eq!(falling(5, 2), BigInt::from(20));
        assert_eq!(falling(2, 3), BigInt::from(0));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_scalar("-3").unwrap(), int(-3));
        assert_eq!(parse_scalar(" 1/-2 ").unwrap(), ratio(-1, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("0.5").is_err());
        assert_eq!(format_scalar(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&int(0)), "0");
        assert_eq!(format_scalar(&ratio(8, 4)), "2");
    }
}
