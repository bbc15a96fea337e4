//! Exact rational scalars.
//!
//! Every exact quantity in this crate is a [`Rational`]: an
//! arbitrary-precision fraction kept canonical (fully reduced, positive
//! denominator) by `num-rational`, so equality is plain structural
//! comparison. Floating point enters only at the quadrature and
//! simulation boundaries, through [`to_f64_nearest`].

use alloc::format;
use alloc::string::String;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// Arbitrary-precision fraction in canonical form.
pub type Rational = num_rational::BigRational;

/// `numer/denom` from machine integers.
///
/// Panics if `denom` is zero; intended for literals in code and tests.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A whole number as a rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// The degenerate falling factorial `x (x−λ) (x−2λ) ⋯ (x−(n−1)λ)`.
///
/// The empty product (n = 0) is 1. At λ = 0 this reduces to `x^n`, at
/// λ = 1 to the ordinary falling factorial.
pub fn degenerate_falling_factorial(x: &Rational, n: u32, lambda: &Rational) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..n {
        acc *= &factor;
        factor -= lambda;
    }
    acc
}

/// Renders a rational with an explicit denominator: `3/2`, `-1/3`, `0/1`.
///
/// Every string produced here parses back to an equal value with
/// [`parse_fraction`].
pub fn format_fraction(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Nearest double. The numerator/denominator conversion in `num-rational`
/// rounds correctly, so the relative error is below 2⁻⁵² — negligible
/// against the 1e−12 quadrature tolerance and statistical noise.
pub fn to_f64_nearest(value: &Rational) -> f64 {
    value.to_f64().expect("finite rational converts to f64")
}

/// Failure modes of [`parse_fraction`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseFractionError {
    Empty,
    BadInteger,
    ZeroDenominator,
}

impl fmt::Display for ParseFractionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => write!(f, "empty fraction string"),
            Self::BadInteger => write!(f, "fraction parts must be integers"),
            Self::ZeroDenominator => write!(f, "fraction denominator is zero"),
        }
    }
}

impl core::error::Error for ParseFractionError {}

/// Parses `p/q` or a bare integer `p` into a canonical rational.
pub fn parse_fraction(text: &str) -> Result<Rational, ParseFractionError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseFractionError::Empty);
    }
    let parse_int =
        |part: &str| part.trim().parse::<BigInt>().map_err(|_| ParseFractionError::BadInteger);
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((num, den)) => {
            let numer = parse_int(num)?;
            let denom = parse_int(den)?;
            if denom.is_zero() {
                return Err(ParseFractionError::ZeroDenominator);
            }
            Ok(Rational::new(numer, denom))
        }
    }
}
