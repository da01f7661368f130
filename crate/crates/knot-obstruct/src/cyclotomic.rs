//! Cyclotomic polynomials and products of their powers.
//!
//! `cyclotomic(n)` computes phi_n by iterated exact division: start from
//! t^n - 1 and divide out phi_d for every proper divisor d of n. The results
//! are memoized in a process-wide table behind a mutex, so concurrent callers
//! see a consistent cache.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::poly::IntPoly;

/// Divisors of n in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient; the degree of phi_n.
pub fn totient(mut n: u64) -> u64 {
    assert!(n >= 1);
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn cache() -> &'static Mutex<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The nth cyclotomic polynomial phi_n.
pub fn cyclotomic(n: u64) -> IntPoly {
    (*cyclotomic_shared(n)).clone()
}

fn cyclotomic_shared(n: u64) -> Arc<IntPoly> {
    assert!(n >= 1);
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return Arc::clone(hit);
    }
    let poly = if n == 1 {
        IntPoly::from_i64_coeffs(&[-1, 1])
    } else {
        let mut acc = IntPoly::power_minus_one(n as usize);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_shared(d);
            acc = acc
                .divide_exact(&phi_d)
                .expect("phi_d divides t^n - 1 for every divisor d of n");
        }
        acc
    };
    let poly = Arc::new(poly);
    // Concurrent computations of the same n produce equal polynomials, so a
    // double insert is harmless.
    Arc::clone(
        cache()
            .lock()
            .unwrap()
            .entry(n)
            .or_insert_with(|| Arc::clone(&poly)),
    )
}

/// A formal product of cyclotomic powers, prod phi_n ^ e_n, keyed by n.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CyclotomicFactorization {
    factors: BTreeMap<u64, u32>,
}

impl CyclotomicFactorization {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, n: u64) -> u32 {
        self.factors.get(&n).copied().unwrap_or(0)
    }

    pub fn push(&mut self, n: u64, exponent: u32) {
        assert!(n >= 1 && exponent >= 1);
        *self.factors.entry(n).or_insert(0) += exponent;
    }

    /// Factors as (n, exponent) pairs in ascending n.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&n, &e)| (n, e))
    }

    /// Pointwise exponent sum; the factorization of a product.
    pub fn combine(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (n, e) in other.iter() {
            out.push(n, e);
        }
        out
    }

    /// Degree of the expansion, via totients.
    pub fn degree(&self) -> u64 {
        self.iter().map(|(n, e)| totient(n) * e as u64).sum()
    }

    /// Multiplies everything out. The empty product is 1.
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::one();
        for (n, e) in self.iter() {
            acc = &acc * &cyclotomic(n).pow(e);
        }
        acc
    }
}

impl std::fmt::Display for CyclotomicFactorization {
    /// Renders e.g. `phi_6^2 phi_18`; the empty product renders as `1`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (n, e) in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "phi_{n}")?;
            } else {
                write!(f, "phi_{n}^{e}")?;
            }
        }
        Ok(())
    }
}
