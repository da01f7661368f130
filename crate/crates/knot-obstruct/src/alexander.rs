//! Alexander polynomials of torus knots and connected sums.
//!
//! Two independent routes are kept deliberately separate: the quotient route
//! divides (t^{pq} - 1)(t - 1) by (t^p - 1)(t^q - 1) exactly, and the factored
//! route assembles the product of phi_{ab} over divisor pairs a | p, b | q
//! with a, b > 1. Their agreement is a standing test invariant.
//!
//! Mirroring preserves the Alexander polynomial, so summand signs are ignored
//! throughout this module.

use crate::cyclotomic::{divisors, CyclotomicFactorization};
use crate::knot::{KnotSum, TorusKnot};
use crate::poly::IntPoly;

/// Alexander polynomial of T(p,q) as the exact quotient
/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
pub fn torus_alexander_quotient(knot: &TorusKnot) -> IntPoly {
    let p = knot.p() as usize;
    let q = knot.q() as usize;
    let num = &IntPoly::power_minus_one(p * q) * &IntPoly::power_minus_one(1);
    let den = &IntPoly::power_minus_one(p) * &IntPoly::power_minus_one(q);
    num.divide_exact(&den)
        .expect("(t^p - 1)(t^q - 1) divides (t^pq - 1)(t - 1) for coprime p, q")
}

/// The cyclotomic factorization of the Alexander polynomial of T(p,q):
/// one factor phi_{ab} for every pair of divisors a of p and b of q with
/// a > 1 and b > 1.
pub fn torus_alexander_factored(knot: &TorusKnot) -> CyclotomicFactorization {
    let mut factors = CyclotomicFactorization::empty();
    for a in divisors(knot.p() as u64) {
        if a == 1 {
            continue;
        }
        for b in divisors(knot.q() as u64) {
            if b == 1 {
                continue;
            }
            factors.push(a * b, 1);
        }
    }
    factors
}

/// Alexander polynomial of a connected sum: the product over summands.
pub fn sum_alexander(sum: &KnotSum) -> IntPoly {
    let mut acc = IntPoly::one();
    for knot in sum.summands() {
        acc = &acc * &torus_alexander_quotient(knot);
    }
    acc
}

/// Factored form of the sum's Alexander polynomial; the exponent of phi_r is
/// the number of summands whose own factorization contains phi_r.
pub fn sum_alexander_factored(sum: &KnotSum) -> CyclotomicFactorization {
    let mut acc = CyclotomicFactorization::empty();
    for knot in sum.summands() {
        acc = acc.combine(&torus_alexander_factored(knot));
    }
    acc
}
