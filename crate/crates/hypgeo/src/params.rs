//! The five-parameter tuple (a, b, c, d, e) of the series z·₃F₂(a,b,c;d,e;z),
//! restricted to exact rationals and validated at construction.

use crate::rational::{rational_serde, Rational};
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Why a parameter tuple was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    /// a, b and c must be strictly positive.
    #[error("parameter {name} = {value} must be positive")]
    NonPositive { name: char, value: String },
    /// d and e may be any rational except zero or a negative integer, where
    /// the series denominator degenerates.
    #[error("parameter {name} = {value} is zero or a negative integer (series undefined)")]
    Pole { name: char, value: String },
}

/// Validated parameter tuple. `a`, `b`, `c` are strictly positive; `d`, `e`
/// avoid the poles `0, -1, -2, …`. All five values are exact rationals.
///
/// Construction is the only validation point: once built, every operation in
/// the crate may assume the invariants hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterSet {
    #[serde(with = "rational_serde")]
    a: Rational,
    #[serde(with = "rational_serde")]
    b: Rational,
    #[serde(with = "rational_serde")]
    c: Rational,
    #[serde(with = "rational_serde")]
    d: Rational,
    #[serde(with = "rational_serde")]
    e: Rational,
}

fn is_pole(x: &Rational) -> bool {
    !x.is_positive() && x.is_integer()
}

impl ParameterSet {
    /// Builds a parameter tuple, rejecting nonpositive a/b/c and pole d/e.
    pub fn new(
        a: Rational,
        b: Rational,
        c: Rational,
        d: Rational,
        e: Rational,
    ) -> Result<Self, ParamError> {
        for (name, value) in [('a', &a), ('b', &b), ('c', &c)] {
            if !value.is_positive() {
                return Err(ParamError::NonPositive {
                    name,
                    value: value.to_string(),
                });
            }
        }
        for (name, value) in [('d', &d), ('e', &e)] {
            if is_pole(value) {
                return Err(ParamError::Pole {
                    name,
                    value: value.to_string(),
                });
            }
        }
        Ok(ParameterSet { a, b, c, d, e })
    }

    /// Convenience constructor from small integers, for tests and examples.
    pub fn from_integers(a: i64, b: i64, c: i64, d: i64, e: i64) -> Result<Self, ParamError> {
        ParameterSet::new(
            crate::rational::int(a),
            crate::rational::int(b),
            crate::rational::int(c),
            crate::rational::int(d),
            crate::rational::int(e),
        )
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn e(&self) -> &Rational {
        &self.e
    }

    /// True when both lower parameters are strictly positive; the theorem
    /// predicates require this on top of the series-level invariants.
    pub fn lower_params_positive(&self) -> bool {
        self.d.is_positive() && self.e.is_positive()
    }

    /// Elementary symmetric functions (a+b+c, ab+bc+ca, abc) of the upper
    /// parameters, used throughout the predicate polynomials.
    pub fn upper_symmetric(&self) -> (Rational, Rational, Rational) {
        let s1 = &self.a + &self.b + &self.c;
        let s2 = &self.a * &self.b + &self.b * &self.c + &self.a * &self.c;
        let s3 = &self.a * &self.b * &self.c;
        (s1, s2, s3)
    }
}

impl fmt::Display for ParameterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a, b, c, d, e) = ({}, {}, {}, {}, {})",
            self.a, self.b, self.c, self.d, self.e
        )
    }
}
