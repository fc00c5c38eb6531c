//! Exact rational arithmetic: the carrier type for every parameter and
//! coefficient value in this crate.
//!
//! [`Rational`] is an unbounded-precision fraction kept in lowest terms with a
//! positive denominator; all arithmetic on it is exact. Parsing accepts the
//! three input forms used throughout the CLI and file formats: `p/q`, a plain
//! integer, or a finite decimal (decimals convert exactly by scaling with
//! powers of ten).

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number: unbounded numerator, unbounded positive denominator,
/// always in lowest terms.
pub type Rational = num_rational::BigRational;

/// Error produced when a string cannot be read as an exact rational.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {text:?} as a rational: {reason}")]
pub struct RationalParseError {
    /// The offending input text.
    pub text: String,
    /// Short description of what was wrong.
    pub reason: String,
}

impl RationalParseError {
    fn new(text: &str, reason: impl Into<String>) -> Self {
        RationalParseError {
            text: text.to_owned(),
            reason: reason.into(),
        }
    }
}

/// Shorthand constructor from an integer pair. Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "denominator must be nonzero");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand constructor from an integer.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Parses `p/q`, an integer, or a finite decimal into an exact [`Rational`].
///
/// Decimals convert exactly: `"1.45"` becomes `29/20`. A leading `+` or `-`
/// is accepted on the whole value and on the numerator of a fraction.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(RationalParseError::new(text, "empty input"));
    }
    if let Some((num_text, den_text)) = trimmed.split_once('/') {
        let num = parse_decimal(text, num_text)?;
        let den = parse_decimal(text, den_text)?;
        if den.is_zero() {
            return Err(RationalParseError::new(text, "zero denominator"));
        }
        return Ok(num / den);
    }
    parse_decimal(text, trimmed)
}

/// Parses an integer or finite decimal literal (no fraction slash).
fn parse_decimal(whole: &str, part: &str) -> Result<Rational, RationalParseError> {
    let part = part.trim();
    let (sign, digits) = match part.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, part.strip_prefix('+').unwrap_or(part)),
    };
    if digits.is_empty() {
        return Err(RationalParseError::new(whole, "missing digits"));
    }
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(RationalParseError::new(whole, "missing digits"));
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return Err(RationalParseError::new(whole, "invalid digit"));
    }
    let mut numer = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part
            .parse::<BigInt>()
            .map_err(|e| RationalParseError::new(whole, e.to_string()))?
    };
    let mut denom = BigInt::one();
    if !frac_part.is_empty() {
        let frac: BigInt = frac_part
            .parse()
            .map_err(|e: num_bigint::ParseBigIntError| RationalParseError::new(whole, e.to_string()))?;
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        numer = numer * &scale + frac;
        denom = scale;
    }
    Ok(Rational::new(numer * sign, denom))
}

/// Returns a rational `u` with `u >= sqrt(x)` and `u - sqrt(x) < 2^-bits`,
/// for nonnegative `x`. Used to certify modulus bounds of complex points.
pub fn sqrt_upper(x: &Rational, bits: u32) -> Rational {
    assert!(!x.is_negative(), "sqrt_upper needs a nonnegative argument");
    if x.is_zero() {
        return Rational::zero();
    }
    // ceil(sqrt(ceil(x * 4^bits))) / 2^bits  >=  sqrt(x)
    let scale = BigUint::one() << (2 * bits);
    let scaled = (x * Rational::from_integer(BigInt::from_biguint(Sign::Plus, scale))).ceil();
    let scaled_uint = scaled
        .to_integer()
        .to_biguint()
        .expect("ceil of a nonnegative value is nonnegative");
    let root = scaled_uint.sqrt();
    let root = if &root * &root < scaled_uint {
        root + BigUint::one()
    } else {
        root
    };
    Rational::new(
        BigInt::from_biguint(Sign::Plus, root),
        BigInt::from_biguint(Sign::Plus, BigUint::one() << bits),
    )
}

/// Serde adapter serializing [`Rational`] as an exact `p/q` string (never a
/// float), and deserializing through [`parse_rational`].
pub mod rational_serde {
    use super::{parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(de)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fraction() {
        assert_eq!(parse_rational("7/5").unwrap(), ratio(7, 5));
    }

    #[test]
    fn parses_integer_and_sign() {
        assert_eq!(parse_rational("42").unwrap(), int(42));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("+3").unwrap(), int(3));
    }

    #[test]
    fn parses_decimal_exactly() {
        assert_eq!(parse_rational("1.45").unwrap(), ratio(29, 20));
        assert_eq!(parse_rational("0.95").unwrap(), ratio(19, 20));
        assert_eq!(parse_rational("-0.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(".25").unwrap(), ratio(1, 4));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["abc", "", "1/0", "1.2.3", "1/", "/3", "--2", "1e-3"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn display_reparses_identically() {
        for value in [ratio(7, 5), int(4), ratio(-29, 20), int(0)] {
            let text = value.to_string();
            assert_eq!(parse_rational(&text).unwrap(), value);
        }
    }

    #[test]
    fn sqrt_upper_dominates() {
        for (n, d) in [(1i64, 2i64), (9, 1), (2, 1), (19, 20), (0, 1)] {
            let x = ratio(n, d);
            let u = sqrt_upper(&x, 64);
            assert!(&u * &u >= x, "upper bound must dominate sqrt({n}/{d})");
        }
        // 2^-64 slack check on a perfect square
        assert_eq!(sqrt_upper(&int(9), 8), int(3));
    }
}
