//! Exact rational points of the open interval (0,1), used as circle angles.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AngleError {
    #[error("angle {num}/{den} is not inside the open interval (0,1)")]
    OutOfRange { num: i64, den: i64 },
}

/// A reduced fraction a/b with 0 < a/b < 1. Parametrizes the unit circle
/// point e^{2 pi i a/b}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    num: i64,
    den: i64,
}

impl RationalAngle {
    pub fn new(num: i64, den: i64) -> Result<Self, AngleError> {
        if den <= 0 || num <= 0 || num >= den {
            return Err(AngleError::OutOfRange { num, den });
        }
        let g = num.gcd(&den);
        Ok(RationalAngle {
            num: num / g,
            den: den / g,
        })
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// The conjugate angle 1 - x. Stays reduced because gcd(b-a, b) = gcd(a, b).
    pub fn complement(&self) -> RationalAngle {
        RationalAngle {
            num: self.den - self.num,
            den: self.den,
        }
    }

    /// Midpoint of two angles (or of an angle and an endpoint of [0,1]).
    pub fn midpoint(a: (i64, i64), b: (i64, i64)) -> RationalAngle {
        let num = a.0 * b.1 + b.0 * a.1;
        let den = 2 * a.1 * b.1;
        RationalAngle::new(num, den).expect("midpoint of points in [0,1] lies in (0,1)")
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn is_below_half(&self) -> bool {
        2 * self.num < self.den
    }
}

impl Ord for RationalAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for RationalAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
