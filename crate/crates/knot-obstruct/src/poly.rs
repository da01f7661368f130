//! Dense integer polynomials with arbitrary-precision coefficients.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial is the empty coefficient vector. All arithmetic is
//! exact over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// Exact division was requested but the divisor does not divide the
    /// dividend over the integers.
    #[error("nonzero remainder: divisor does not divide dividend over the integers")]
    NonzeroRemainder,
    /// `leading_terms(k)` was asked for more coefficients than the degree allows.
    #[error("degree too small: polynomial of degree {degree:?} has no {wanted} leading terms")]
    DegreeTooSmall {
        degree: Option<usize>,
        wanted: usize,
    },
}

/// A univariate polynomial over the integers.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// The monomial c * t^k.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// t^n - 1.
    pub fn power_minus_one(n: usize) -> Self {
        assert!(n >= 1);
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of t^i (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficients, no trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn pow(&self, k: u32) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / den`, or `NonzeroRemainder` if `den` does not
    /// divide `self` over the integers.
    ///
    /// Standard long division; every quotient coefficient must come out as an
    /// exact integer, and the final remainder must vanish.
    pub fn divide_exact(&self, den: &IntPoly) -> Result<IntPoly, PolyError> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let num_deg = self.degree().unwrap();
        let den_deg = den.degree().unwrap();
        if num_deg < den_deg {
            return Err(PolyError::NonzeroRemainder);
        }
        let den_lead = den.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let quot_len = num_deg - den_deg + 1;
        let mut quot = vec![BigInt::zero(); quot_len];
        for k in (0..quot_len).rev() {
            let lead = rem[k + den_deg].clone();
            if lead.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&lead, den_lead);
            if !r.is_zero() {
                return Err(PolyError::NonzeroRemainder);
            }
            for (i, d) in den.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NonzeroRemainder);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// The k top coefficients, highest degree first.
    pub fn leading_terms(&self, k: usize) -> Result<Vec<BigInt>, PolyError> {
        match self.degree() {
            Some(d) if d + 1 >= k => Ok((0..k).map(|i| self.coeffs[d - i].clone()).collect()),
            degree => Err(PolyError::DegreeTooSmall { degree, wanted: k }),
        }
    }

    /// True iff every nonzero coefficient is +1 or -1.
    ///
    /// This is the coefficient condition satisfied by Alexander polynomials of
    /// L-space knots.
    pub fn is_lspace_shape(&self) -> bool {
        assert!(!self.is_zero());
        self.coeffs.iter().all(|c| c.is_zero() || c.abs().is_one())
    }

    /// Stricter variant: nonzero coefficients are all +-1 and alternate in sign.
    pub fn is_lspace_shape_alternating(&self) -> bool {
        if !self.is_lspace_shape() {
            return false;
        }
        let mut prev: Option<bool> = None;
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let pos = c.is_positive();
            if prev == Some(pos) {
                return false;
            }
            prev = Some(pos);
        }
        true
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficients read the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(d) = rhs.coeffs.get(i) {
                c += d;
            }
            coeffs.push(c);
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    // Schoolbook multiplication; degrees stay at desk scale.
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPoly {
    /// Renders in descending degree, e.g. `t^4 - t^3 + t^2 - t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64_coeffs(coeffs)
    }

    #[test]
    fn mul_difference_of_squares() {
        // (t - 1)(t + 1) = t^2 - 1
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn pow_zero_is_one() {
        assert_eq!(p(&[3, -2, 5]).pow(0), IntPoly::one());
        assert_eq!(IntPoly::zero().pow(0), IntPoly::one());
    }

    #[test]
    fn mul_degrees_add() {
        let a = p(&[1, 2, 3]);
        let b = p(&[-4, 5]);
        assert_eq!((&a * &b).degree(), Some(3));
    }

    #[test]
    fn zero_degree_is_none() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p(&[7]).degree(), Some(0));
    }

    #[test]
    fn divide_exact_simple() {
        // (t^2 - 1) / (t - 1) = t + 1
        assert_eq!(
            p(&[-1, 0, 1]).divide_exact(&p(&[-1, 1])).unwrap(),
            p(&[1, 1])
        );
    }

    #[test]
    fn divide_exact_trefoil_quotient() {
        // (t^6 - 1)(t - 1) / ((t^2 - 1)(t^3 - 1)) = t^2 - t + 1
        let num = &IntPoly::power_minus_one(6) * &IntPoly::power_minus_one(1);
        let den = &IntPoly::power_minus_one(2) * &IntPoly::power_minus_one(3);
        assert_eq!(num.divide_exact(&den).unwrap(), p(&[1, -1, 1]));
    }

    #[test]
    fn divide_exact_rejects_nonzero_remainder() {
        assert_eq!(
            p(&[1, 0, 1]).divide_exact(&p(&[-1, 1])),
            Err(PolyError::NonzeroRemainder)
        );
    }

    #[test]
    fn divide_exact_roundtrip() {
        let a = p(&[2, 0, -7, 1, 3]);
        let b = p(&[-1, 4, 2]);
        let prod = &a * &b;
        assert_eq!(prod.divide_exact(&b).unwrap(), a);
        assert_eq!(prod.divide_exact(&a).unwrap(), b);
    }

    #[test]
    fn leading_terms_basics() {
        assert_eq!(
            p(&[1, -1, 1]).leading_terms(2).unwrap(),
            vec![BigInt::from(1), BigInt::from(-1)]
        );
        assert!(matches!(
            p(&[5]).leading_terms(2),
            Err(PolyError::DegreeTooSmall { .. })
        ));
        assert!(matches!(
            IntPoly::zero().leading_terms(1),
            Err(PolyError::DegreeTooSmall { degree: None, .. })
        ));
    }

    #[test]
    fn lspace_shape() {
        // phi_18 = t^6 - t^3 + 1
        assert!(p(&[1, 0, 0, -1, 0, 0, 1]).is_lspace_shape());
        assert!(!p(&[1, -2, 1]).is_lspace_shape());
        assert!(IntPoly::one().is_lspace_shape());
    }

    #[test]
    fn lspace_shape_alternating() {
        assert!(p(&[1, -1, 1]).is_lspace_shape_alternating());
        // +-1 coefficients but two +1 in a row
        assert!(!p(&[1, 1]).is_lspace_shape_alternating());
        assert!(p(&[1, 0, 0, -1, 0, 0, 1]).is_lspace_shape_alternating());
    }

    #[test]
    fn display_formatting() {
        assert_eq!(p(&[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(&[0, -2]).to_string(), "-2t");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(p(&[0, 1, 0, 3]).to_string(), "3t^3 + t");
    }

    #[test]
    fn eval_and_palindrome() {
        let q = p(&[1, -1, 1]);
        assert_eq!(q.eval(&BigInt::from(2)), BigInt::from(3));
        assert_eq!(q.eval_at_one(), BigInt::from(1));
        assert!(q.is_palindromic());
        assert!(!p(&[1, 2]).is_palindromic());
    }
}
