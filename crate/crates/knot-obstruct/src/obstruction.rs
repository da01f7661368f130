//! The obstruction pipeline: can this sum of torus knots be concordant to
//! an L-space knot?
//!
//! The decision rests on two facts about an L-space knot J: its Alexander
//! polynomial has all coefficients in {0, ±1} and satisfies
//! 2 tau(J) = deg Δ_J, and concordant knots share tau and signature jumps.
//! The jump spectrum of the sum therefore forces cyclotomic factors of
//! Δ_J, and the forced degree is played against 2 tau.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::alexander::{sum_alexander, sum_alexander_factored};
use crate::cyclotomic::CyclotomicFactorization;
use crate::knot::{KnotSum, TorusKnot};
use crate::poly::IntPoly;
use crate::signature::{jump_spectrum, JumpSpectrum};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("jumps at denominator {den} mix parities ({a} and {b})")]
    ParityInconsistent { den: i64, a: i64, b: i64 },
}

/// tau of the sum: signed genera (p-1)(q-1)/2 of the summands, added up.
pub fn tau(sum: &KnotSum) -> i64 {
    sum.summands().iter().map(tau_term).sum()
}

fn tau_term(knot: &TorusKnot) -> i64 {
    knot.sign().factor() * (knot.alexander_degree() / 2) as i64
}

/// "tau = -3 - 6 + 10 = 1", used in reason strings for mixed sums where
/// the additivity convention is doing real work.
fn tau_breakdown(sum: &KnotSum) -> String {
    let mut s = String::from("tau = ");
    for (i, knot) in sum.summands().iter().enumerate() {
        let term = tau_term(knot);
        if i == 0 {
            s.push_str(&term.to_string());
        } else if term < 0 {
            s.push_str(&format!(" - {}", -term));
        } else {
            s.push_str(&format!(" + {term}"));
        }
    }
    s.push_str(&format!(" = {}", tau(sum)));
    s
}

/// Cyclotomic factors any concordant knot's Alexander polynomial must
/// carry: a jump at a/b forces phi_b to the power max |J| over the angles
/// with denominator b. Jump magnitudes at a common denominator must agree
/// mod 2; a violation cannot come from a genuine knot spectrum.
pub fn forced_factor(spectrum: &JumpSpectrum) -> Result<CyclotomicFactorization, ObstructionError> {
    let mut forced = CyclotomicFactorization::empty();
    for (x, j) in spectrum.iter() {
        let den = x.denominator();
        let magnitude = j.abs();
        let seen = spectrum.max_abs_jump_with_denominator(den);
        if (seen - magnitude) % 2 != 0 {
            return Err(ObstructionError::ParityInconsistent {
                den,
                a: seen,
                b: magnitude,
            });
        }
        let have = forced.exponent(den as u64);
        if magnitude as u32 > have {
            forced.push(den as u64, magnitude as u32 - have);
        }
    }
    Ok(forced)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Obstructed => write!(f, "obstructed"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckOutcome::Pass => write!(f, "pass"),
            CheckOutcome::Fail => write!(f, "fail"),
            CheckOutcome::Skipped => write!(f, "skipped"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub outcome: CheckOutcome,
    pub reason: String,
}

/// Toggles for the optional parts of the check ladder.
#[derive(Clone, Copy, Debug)]
pub struct ObstructOptions {
    /// Require the pinned polynomial to start t^2g - t^{2g-1}.
    pub leading_terms: bool,
    /// Require strictly alternating nonzero coefficients instead of just
    /// coefficients in {0, ±1}.
    pub strict_alternating: bool,
}

impl Default for ObstructOptions {
    fn default() -> Self {
        ObstructOptions {
            leading_terms: true,
            strict_alternating: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub tau: i64,
    pub alexander: IntPoly,
    pub factorization: CyclotomicFactorization,
    pub spectrum: JumpSpectrum,
    pub forced_factor: CyclotomicFactorization,
    pub forced_degree: u64,
    pub checks: Vec<CheckResult>,
    pub verdict: Verdict,
}

/// Runs the full check ladder and records every outcome.
///
/// Ladder, in order:
/// 1. degree: the forced factors alone outgrow 2 tau.
/// 2. nonnegativity: tau <= 0 yet a nontrivial factor is forced; an
///    L-space knot with tau <= 0 is the unknot.
/// 3. exact-polynomial: forced degree equal to 2 tau pins the candidate
///    polynomial completely; its coefficients must lie in {0, ±1}.
/// 4. leading-terms: the pinned polynomial must start t^2g - t^{2g-1}.
///
/// The verdict is obstructed exactly when some check fails.
pub fn obstruct(sum: &KnotSum, options: ObstructOptions) -> ObstructionReport {
    let tau = tau(sum);
    let spectrum = jump_spectrum(sum);
    let forced = forced_factor(&spectrum).expect("knot spectra keep jump parity per denominator");
    let forced_degree = forced.degree();
    let two_tau = 2 * tau;
    let mixed = sum.len() > 1 && !sum.is_positive();
    let mut checks = Vec::with_capacity(4);

    let degree_outcome = if (forced_degree as i64) > two_tau {
        let mut reason = format!(
            "a concordant L-space knot needs deg(Delta) = 2*tau = {two_tau}, \
             but the jump spectrum forces degree {forced_degree}"
        );
        if mixed {
            reason.push_str(&format!(
                "; {} by additivity over signed summands",
                tau_breakdown(sum)
            ));
        }
        CheckResult {
            name: "degree",
            outcome: CheckOutcome::Fail,
            reason,
        }
    } else {
        let mut reason = format!("forced degree {forced_degree} within 2*tau = {two_tau}");
        if mixed {
            reason.push_str(&format!(
                "; {} by additivity over signed summands",
                tau_breakdown(sum)
            ));
        }
        CheckResult {
            name: "degree",
            outcome: CheckOutcome::Pass,
            reason,
        }
    };
    checks.push(degree_outcome);

    let nonneg = if tau <= 0 && !forced.is_empty() {
        CheckResult {
            name: "nonnegativity",
            outcome: CheckOutcome::Fail,
            reason: format!(
                "tau = {tau} <= 0 leaves only the unknot among L-space knots, \
                 yet the spectrum forces {forced}"
            ),
        }
    } else if tau <= 0 {
        CheckResult {
            name: "nonnegativity",
            outcome: CheckOutcome::Pass,
            reason: format!("tau = {tau} <= 0 but no factor is forced"),
        }
    } else {
        CheckResult {
            name: "nonnegativity",
            outcome: CheckOutcome::Pass,
            reason: format!("tau = {tau} > 0"),
        }
    };
    checks.push(nonneg);

    let pinned = if forced_degree as i64 == two_tau && two_tau >= 0 {
        Some(forced.expand())
    } else {
        None
    };

    let exact = match &pinned {
        None => CheckResult {
            name: "exact-polynomial",
            outcome: CheckOutcome::Skipped,
            reason: format!(
                "no pinned polynomial: forced degree {forced_degree} != 2*tau = {two_tau}"
            ),
        },
        Some(poly) => {
            let ok = if options.strict_alternating {
                poly.is_lspace_shape_alternating()
            } else {
                poly.is_lspace_shape()
            };
            if ok {
                CheckResult {
                    name: "exact-polynomial",
                    outcome: CheckOutcome::Pass,
                    reason: format!("pinned polynomial {forced} has L-space coefficient shape"),
                }
            } else {
                let detail = first_bad_coefficient(poly)
                    .map(|(deg, c)| format!("coefficient {c} at t^{deg}"))
                    .unwrap_or_else(|| "non-alternating coefficients".to_string());
                CheckResult {
                    name: "exact-polynomial",
                    outcome: CheckOutcome::Fail,
                    reason: format!(
                        "pinned polynomial {forced} expands with {detail}, \
                         impossible for an L-space knot"
                    ),
                }
            }
        }
    };
    checks.push(exact);

    let leading = match &pinned {
        _ if !options.leading_terms => CheckResult {
            name: "leading-terms",
            outcome: CheckOutcome::Skipped,
            reason: "disabled".to_string(),
        },
        None => CheckResult {
            name: "leading-terms",
            outcome: CheckOutcome::Skipped,
            reason: "no pinned polynomial".to_string(),
        },
        Some(poly) if poly.degree() == Some(0) => CheckResult {
            name: "leading-terms",
            outcome: CheckOutcome::Pass,
            reason: "pinned polynomial is the unknot's".to_string(),
        },
        Some(poly) => {
            let top = poly
                .leading_terms(2)
                .expect("pinned degree is even and >= 2");
            if top == [BigInt::from(1), BigInt::from(-1)] {
                CheckResult {
                    name: "leading-terms",
                    outcome: CheckOutcome::Pass,
                    reason: "pinned polynomial starts t^2g - t^(2g-1)".to_string(),
                }
            } else {
                CheckResult {
                    name: "leading-terms",
                    outcome: CheckOutcome::Fail,
                    reason: format!(
                        "an L-space polynomial starts t^2g - t^(2g-1); \
                         pinned one has top coefficients {}, {}",
                        top[0], top[1]
                    ),
                }
            }
        }
    };
    checks.push(leading);

    let verdict = if checks.iter().any(|c| c.outcome == CheckOutcome::Fail) {
        Verdict::Obstructed
    } else {
        Verdict::Inconclusive
    };

    ObstructionReport {
        tau,
        alexander: sum_alexander(sum),
        factorization: sum_alexander_factored(sum),
        spectrum,
        forced_factor: forced,
        forced_degree,
        checks,
        verdict,
    }
}

fn first_bad_coefficient(poly: &IntPoly) -> Option<(usize, BigInt)> {
    let one = BigInt::from(1);
    let minus_one = BigInt::from(-1);
    let zero = BigInt::from(0);
    poly.coeffs()
        .iter()
        .enumerate()
        .rev()
        .find(|(_, c)| **c != one && **c != minus_one && **c != zero)
        .map(|(i, c)| (i, c.clone()))
}

/// Summary of an exhaustive sweep over positive sums.
#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub pairs: usize,
    pub sums_checked: u64,
    pub obstructed: u64,
    pub inconclusive: u64,
    pub counterexamples: Vec<String>,
}

/// Checks every multiset of n positive torus knots, for each n in the
/// range, against the expected verdict: obstructed for n >= 2 with the
/// pinned polynomial's second coefficient equal to -n, inconclusive for
/// n = 1 (torus knots are themselves L-space knots). Any deviation is
/// collected as a counterexample; an exhaustive run must come back empty.
pub fn verify_main_theorem(
    p_max: u32,
    q_max: u32,
    n_range: std::ops::RangeInclusive<usize>,
) -> SweepReport {
    let pairs = coprime_pairs(p_max, q_max);
    let mut report = SweepReport {
        pairs: pairs.len(),
        ..SweepReport::default()
    };
    for n in n_range {
        if n == 0 {
            continue;
        }
        for_each_multiset(&pairs, n, &mut |chosen| {
            let sum = KnotSum::new(
                chosen
                    .iter()
                    .map(|&(p, q)| TorusKnot::new(p, q).unwrap())
                    .collect(),
            )
            .unwrap();
            let result = obstruct(&sum, ObstructOptions::default());
            report.sums_checked += 1;
            match result.verdict {
                Verdict::Obstructed => report.obstructed += 1,
                Verdict::Inconclusive => report.inconclusive += 1,
            }
            if n == 1 {
                if result.verdict != Verdict::Inconclusive {
                    report.counterexamples.push(sum.to_string());
                }
                return;
            }
            let second = result
                .forced_factor
                .expand()
                .coeff(result.forced_degree as usize - 1);
            if result.verdict != Verdict::Obstructed || second != BigInt::from(-(n as i64)) {
                report.counterexamples.push(sum.to_string());
            }
        });
    }
    report
}

fn coprime_pairs(p_max: u32, q_max: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for p in 2..=p_max {
        for q in (p + 1)..=q_max {
            if num_integer::gcd(p, q) == 1 {
                pairs.push((p, q));
            }
        }
    }
    pairs
}

fn for_each_multiset(pairs: &[(u32, u32)], n: usize, f: &mut impl FnMut(&[(u32, u32)])) {
    fn rec(
        pairs: &[(u32, u32)],
        start: usize,
        left: usize,
        chosen: &mut Vec<(u32, u32)>,
        f: &mut impl FnMut(&[(u32, u32)]),
    ) {
        if left == 0 {
            f(chosen);
            return;
        }
        for i in start..pairs.len() {
            chosen.push(pairs[i]);
            rec(pairs, i, left - 1, chosen, f);
            chosen.pop();
        }
    }
    rec(pairs, 0, n, &mut Vec::with_capacity(n), f);
}
