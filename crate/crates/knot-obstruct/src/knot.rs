//! Torus knots and their formal connected sums.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

/// Largest accepted torus-knot parameter. Invariant computations allocate
/// polynomials of degree about p*q, so this bounds memory at desk scale.
pub const MAX_PARAMETER: u32 = 1000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KnotError {
    #[error("torus knot parameters must satisfy 2 <= p < q, got ({p},{q})")]
    BadOrder { p: u32, q: u32 },
    #[error("torus knot parameters must be coprime, got ({p},{q}) with gcd {gcd}")]
    NotCoprime { p: u32, q: u32, gcd: u32 },
    #[error("torus knot parameter {q} exceeds the supported limit {MAX_PARAMETER}")]
    TooLarge { q: u32 },
    #[error("a connected sum needs at least one summand")]
    EmptySum,
}

/// Handedness of a summand; `Negative` denotes the mirror -T(p,q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn factor(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// The (p,q) torus knot or its mirror, with 2 <= p < q and gcd(p,q) = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusKnot {
    p: u32,
    q: u32,
    sign: Sign,
}

impl TorusKnot {
    /// The positive torus knot T(p,q).
    pub fn new(p: u32, q: u32) -> Result<Self, KnotError> {
        Self::with_sign(Sign::Positive, p, q)
    }

    pub fn with_sign(sign: Sign, p: u32, q: u32) -> Result<Self, KnotError> {
        if !(2 <= p && p < q) {
            return Err(KnotError::BadOrder { p, q });
        }
        if q > MAX_PARAMETER {
            return Err(KnotError::TooLarge { q });
        }
        let gcd = p.gcd(&q);
        if gcd != 1 {
            return Err(KnotError::NotCoprime { p, q, gcd });
        }
        Ok(TorusKnot { p, q, sign })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }

    pub fn mirror(mut self) -> Self {
        self.sign = self.sign.flipped();
        self
    }

    /// (p-1)(q-1), the degree of the Alexander polynomial and twice the genus.
    pub fn alexander_degree(&self) -> u64 {
        (self.p as u64 - 1) * (self.q as u64 - 1)
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Negative {
            write!(f, "-")?;
        }
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// An ordered formal connected sum of torus knots. The order is kept for
/// rendering, but no computed invariant depends on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotSum {
    summands: Vec<TorusKnot>,
}

impl KnotSum {
    pub fn new(summands: Vec<TorusKnot>) -> Result<Self, KnotError> {
        if summands.is_empty() {
            return Err(KnotError::EmptySum);
        }
        Ok(KnotSum { summands })
    }

    pub fn single(knot: TorusKnot) -> Self {
        KnotSum {
            summands: vec![knot],
        }
    }

    pub fn summands(&self) -> &[TorusKnot] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_positive(&self) -> bool {
        self.summands.iter().all(TorusKnot::is_positive)
    }

    /// Sum of (p_i-1)(q_i-1) over all summands.
    pub fn alexander_degree(&self) -> u64 {
        self.summands.iter().map(TorusKnot::alexander_degree).sum()
    }
}

impl fmt::Display for KnotSum {
    /// Canonical rendering, e.g. `T(4,5) # -T(2,3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in &self.summands {
            if !first {
                write!(f, " # ")?;
            }
            first = false;
            write!(f, "{k}")?;
        }
        Ok(())
    }
}
