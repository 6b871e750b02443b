//! Exact rational scalars and their `"p/q"` string form.
//!
//! Coefficients and data values are `num_rational::BigRational`: always
//! reduced, denominator positive, zero stored as `0/1`. The string form used
//! across all file formats is `"p"` or `"p/q"` with decimal integers; no
//! floating point appears anywhere.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_rational::BigRational as Rational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parse `"p"` or `"p/q"` (optional sign on either part, surrounding
/// whitespace ignored).
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |t: &str| -> Result<BigInt, ParseRationalError> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseRationalError::BadInteger(t.trim().to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Render as `"p"` when the denominator is 1, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Absolute value, used when reporting mismatch magnitudes.
pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}
