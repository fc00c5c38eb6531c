//! Fixed-precision high-precision real numbers for disk evaluation.
//!
//! [`Real`] wraps an arbitrary-precision binary float pinned to
//! [`PRECISION_BITS`] bits of mantissa (about 57 decimal digits) with
//! round-to-even. Exact rationals are used up to the coefficient stage;
//! this type takes over where complex quotient functionals make fixed-cost
//! rational arithmetic impossible. Conversions to and from [`Rational`] are
//! available in both directions (the float-to-rational direction is exact),
//! which lets bound-critical comparisons happen back in exact arithmetic.

use crate::rational::Rational;
use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Working mantissa precision in bits. 192 bits ≈ 57.8 decimal digits,
/// comfortably above the 30-digit floor the evaluation layer guarantees.
pub const PRECISION_BITS: usize = 192;

const RM: RoundingMode = RoundingMode::ToEven;

/// High-precision real number at fixed working precision.
#[derive(Clone, Debug)]
pub struct Real(BigFloat);

fn biguint_to_bigfloat(value: &BigUint, sign: Sign) -> BigFloat {
    if value.is_zero() {
        return BigFloat::new(PRECISION_BITS);
    }
    let bits = value.bits();
    // keep a couple of guard words beyond working precision; the tail each
    // conversion drops is below 2^-(PRECISION_BITS+64) relative
    let cap_words = PRECISION_BITS / 64 + 2;
    let cap_bits = (cap_words * 64) as u64;
    let shift = bits.saturating_sub(cap_bits);
    let top = if shift > 0 { value >> shift } else { value.clone() };
    let words = top.to_u64_digits();
    let exponent = (64 * words.len() as u64 + shift) as i64;
    debug_assert!(exponent <= i32::MAX as i64);
    BigFloat::from_words(&words, sign, exponent as i32)
}

impl Real {
    pub fn zero() -> Self {
        Real(BigFloat::new(PRECISION_BITS))
    }

    pub fn one() -> Self {
        Real::from_u64(1)
    }

    pub fn from_u64(value: u64) -> Self {
        Real(BigFloat::from_u64(value, PRECISION_BITS))
    }

    pub fn from_f64(value: f64) -> Self {
        Real(BigFloat::from_f64(value, PRECISION_BITS))
    }

    pub fn from_bigint(value: &BigInt) -> Self {
        let sign = if value.is_negative() {
            Sign::Neg
        } else {
            Sign::Pos
        };
        Real(biguint_to_bigfloat(value.magnitude(), sign))
    }

    /// Nearest-representable conversion; relative error below
    /// 2^-(PRECISION_BITS-2).
    pub fn from_rational(value: &Rational) -> Self {
        let numer = Real::from_bigint(value.numer());
        let denom = Real::from_bigint(value.denom());
        &numer / &denom
    }

    /// Exact value of this float as a rational (mantissa × 2^exponent).
    pub fn to_rational(&self) -> Rational {
        if self.0.is_zero() {
            return Rational::zero();
        }
        let (words, bit_len, sign, exponent, _) = self
            .0
            .as_raw_parts()
            .expect("finite nonzero float has raw parts");
        let bytes: Vec<u8> = words.iter().flat_map(|w| w.to_le_bytes()).collect();
        let mantissa = BigUint::from_bytes_le(&bytes);
        let mut value = Rational::from_integer(BigInt::from(mantissa));
        let shift = exponent as i64 - bit_len as i64;
        if shift >= 0 {
            value *= Rational::from_integer(BigInt::from(1u8) << shift as usize);
        } else {
            value /= Rational::from_integer(BigInt::from(1u8) << (-shift) as usize);
        }
        if matches!(sign, Sign::Neg) {
            value = -value;
        }
        value
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn sqrt(&self) -> Self {
        Real(self.0.sqrt(PRECISION_BITS, RM))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive() && !self.0.is_zero()
    }

    /// Total order; the crate never produces NaN or infinities on this type.
    pub fn total_cmp(&self, other: &Real) -> Ordering {
        self.partial_cmp(other)
            .expect("Real values are always finite and comparable")
    }

    pub fn min_by_value(self, other: Real) -> Real {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max_by_value(self, other: Real) -> Real {
        if other > self {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Real {
    /// Shortest-roundtrip decimal of the f64 projection; reports elsewhere
    /// format with explicit significant digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real(self.0.$method(&rhs.0, PRECISION_BITS, RM))
            }
        }

        impl $trait for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }

        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-&self.0)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

/// Cosine/sine pairs of the equally spaced angles `2π j / count`,
/// `j = 0..count`. Computed once per grid; the j = 0 pair is exactly (1, 0).
pub fn unit_angles(count: usize) -> Vec<(Real, Real)> {
    let mut consts = Consts::new().expect("constants cache");
    let two_pi = {
        let pi = consts.pi(PRECISION_BITS + 32, RM);
        pi.mul(&BigFloat::from_u64(2, PRECISION_BITS + 32), PRECISION_BITS + 32, RM)
    };
    let count_f = BigFloat::from_u64(count as u64, PRECISION_BITS + 32);
    (0..count)
        .map(|j| {
            if j == 0 {
                return (Real::one(), Real::zero());
            }
            let theta = two_pi
                .mul(&BigFloat::from_u64(j as u64, PRECISION_BITS + 32), PRECISION_BITS + 32, RM)
                .div(&count_f, PRECISION_BITS + 32, RM);
            let cos = Real(theta.cos(PRECISION_BITS, RM, &mut consts));
            let sin = Real(theta.sin(PRECISION_BITS, RM, &mut consts));
            (cos, sin)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn rational_round_trip_is_exact_for_dyadics() {
        let x = Real::from_rational(&ratio(19, 16));
        assert_eq!(x.to_rational(), ratio(19, 16));
        let y = Real::from_rational(&ratio(-3, 8));
        assert_eq!(y.to_rational(), ratio(-3, 8));
    }

    #[test]
    fn non_dyadic_conversion_error_is_tiny() {
        let x = Real::from_rational(&ratio(1, 3));
        let err = (x.to_rational() - ratio(1, 3)).abs();
        // 2^-180 slack on a value near 1/3
        let bound = Rational::new(1.into(), BigInt::from(1u8) << 180);
        assert!(err < bound, "conversion error {err}");
    }

    #[test]
    fn arithmetic_matches_f64_at_low_precision() {
        let a = Real::from_f64(1.5);
        let b = Real::from_f64(0.25);
        assert_eq!((&a + &b).to_f64(), 1.75);
        assert_eq!((&a * &b).to_f64(), 0.375);
        assert_eq!((&a / &b).to_f64(), 6.0);
        assert_eq!((&a - &b).to_f64(), 1.25);
        assert!((-&a).is_negative());
    }

    #[test]
    fn sqrt_squares_back() {
        let two = Real::from_u64(2);
        let root = two.sqrt();
        let err = (&(&root * &root) - &two).abs();
        assert!(err < Real::from_f64(1e-50));
    }

    #[test]
    fn comparisons_are_exact() {
        let a = Real::from_rational(&ratio(1, 3));
        let b = Real::from_rational(&ratio(1, 3));
        assert_eq!(a.total_cmp(&b), Ordering::Equal);
        let c = Real::from_rational(&ratio(2, 3));
        assert!(a < c);
    }

    #[test]
    fn angle_table_lands_on_axes() {
        let table = unit_angles(4);
        assert_eq!(table[0].0.to_f64(), 1.0);
        assert_eq!(table[0].1.to_f64(), 0.0);
        // θ = π: cos ≈ −1, sin ≈ 0 up to the precision of π itself
        assert!((table[2].0.to_f64() + 1.0).abs() < 1e-50);
        assert!(table[2].1.to_f64().abs() < 1e-50);
        // θ = π/2
        assert!(table[1].0.to_f64().abs() < 1e-50);
        assert!((table[1].1.to_f64() - 1.0).abs() < 1e-50);
    }

    #[test]
    fn bigint_conversion_handles_large_values() {
        let big = BigInt::from(7u8).pow(200);
        let x = Real::from_bigint(&big);
        let rel_err = ((x.to_rational() - Rational::from_integer(big.clone()))
            / Rational::from_integer(big))
        .abs();
        let bound = Rational::new(1.into(), BigInt::from(1u8) << 180);
        assert!(rel_err < bound);
    }
}
