//! Complex arithmetic over [`Real`] and disk points with certified modulus
//! bounds.

use super::real::Real;
use super::AnalyticError;
use crate::rational::{sqrt_upper, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Complex number with high-precision components.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn zero() -> Self {
        Complex {
            re: Real::zero(),
            im: Real::zero(),
        }
    }

    pub fn one() -> Self {
        Complex {
            re: Real::one(),
            im: Real::zero(),
        }
    }

    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn scale(&self, factor: &Real) -> Complex {
        Complex {
            re: &self.re * factor,
            im: &self.im * factor,
        }
    }

    pub fn modulus(&self) -> Real {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }

    /// Cheap dominating bound `|re| + |im| ≥ |z|`, used in tail estimates.
    pub fn magnitude_bound(&self) -> Real {
        &self.re.abs() + &self.im.abs()
    }

    pub fn div(&self, rhs: &Complex) -> Complex {
        let denom = &(&rhs.re * &rhs.re) + &(&rhs.im * &rhs.im);
        let re = &(&(&self.re * &rhs.re) + &(&self.im * &rhs.im)) / &denom;
        let im = &(&(&self.im * &rhs.re) - &(&self.re * &rhs.im)) / &denom;
        Complex { re, im }
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        Complex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, self.im.abs())
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

/// Margin factor `1 + 2^-160` applied to nominal radii so the certified
/// modulus bound dominates the at-most-1-ulp placement error of computed
/// cosine/sine components at working precision.
fn with_margin(radius: &Rational) -> Rational {
    let scale = BigInt::from(1u8) << 160;
    radius * Rational::new(&scale + BigInt::one(), scale)
}

/// A point of the open unit disk with a certified rational upper bound on
/// its modulus. Construction rejects bounds that reach 1.
#[derive(Clone, Debug)]
pub struct ComplexPoint {
    value: Complex,
    modulus_bound: Rational,
}

impl ComplexPoint {
    /// Point from exact rational coordinates. The modulus bound is a
    /// certified rational square-root upper bound plus the placement margin.
    pub fn from_rational(re: &Rational, im: &Rational) -> Result<Self, AnalyticError> {
        let squared = re * re + im * im;
        let bound = with_margin(&sqrt_upper(&squared, 96));
        Self::from_parts(
            Complex::new(Real::from_rational(re), Real::from_rational(im)),
            bound,
        )
    }

    /// Point `radius · (cos, sin)` from a rational radius and a precomputed
    /// unit-circle direction (see [`super::real::unit_angles`]).
    pub fn from_polar(radius: &Rational, direction: &(Real, Real)) -> Result<Self, AnalyticError> {
        let r = Real::from_rational(radius);
        let value = Complex::new(&r * &direction.0, &r * &direction.1);
        Self::from_parts(value, with_margin(radius))
    }

    pub fn origin() -> Self {
        ComplexPoint {
            value: Complex::zero(),
            modulus_bound: Rational::zero(),
        }
    }

    fn from_parts(value: Complex, modulus_bound: Rational) -> Result<Self, AnalyticError> {
        if modulus_bound >= Rational::one() {
            return Err(AnalyticError::PointOutsideDisk {
                modulus_bound: modulus_bound.to_string(),
            });
        }
        Ok(ComplexPoint {
            value,
            modulus_bound,
        })
    }

    pub fn value(&self) -> &Complex {
        &self.value
    }

    pub fn re(&self) -> &Real {
        &self.value.re
    }

    pub fn im(&self) -> &Real {
        &self.value.im
    }

    /// Certified rational upper bound on |z|, strictly below 1.
    pub fn modulus_bound(&self) -> &Rational {
        &self.modulus_bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn complex_field_operations() {
        let a = Complex::new(Real::from_f64(1.0), Real::from_f64(2.0));
        let b = Complex::new(Real::from_f64(3.0), Real::from_f64(-1.0));
        let product = &a * &b;
        assert_eq!(product.re.to_f64(), 5.0);
        assert_eq!(product.im.to_f64(), 5.0);
        let quotient = product.div(&b);
        assert!((quotient.re.to_f64() - 1.0).abs() < 1e-50);
        assert!((quotient.im.to_f64() - 2.0).abs() < 1e-50);
        assert_eq!((&a - &a).modulus().to_f64(), 0.0);
    }

    #[test]
    fn magnitude_bound_dominates_modulus() {
        let z = Complex::new(Real::from_f64(0.6), Real::from_f64(-0.8));
        assert!(z.magnitude_bound() >= z.modulus());
        assert!((z.modulus().to_f64() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rational_point_bound_is_certified() {
        let p = ComplexPoint::from_rational(&ratio(3, 10), &ratio(2, 5)).unwrap();
        // |z| = 1/2 exactly
        assert!(p.modulus_bound() >= &ratio(1, 2));
        assert!(p.modulus_bound() < &ratio(50001, 100000));
    }

    #[test]
    fn rejects_points_outside_disk() {
        assert!(ComplexPoint::from_rational(&int(1), &int(0)).is_err());
        assert!(ComplexPoint::from_rational(&ratio(4, 5), &ratio(4, 5)).is_err());
    }

    #[test]
    fn polar_points_track_radius() {
        let directions = super::super::real::unit_angles(8);
        let p = ComplexPoint::from_polar(&ratio(19, 20), &directions[4]).unwrap();
        assert!((p.re().to_f64() + 0.95).abs() < 1e-40);
        assert!(p.modulus_bound() < &int(1));
        assert!(p.modulus_bound() >= &ratio(19, 20));
    }
}
