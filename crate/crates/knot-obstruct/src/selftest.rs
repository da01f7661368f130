//! Exhaustive identity and cross-check suites, runnable from the CLI.
//!
//! Each suite sweeps a fixed desk-scale range and collects violations as
//! strings. An implementation bug shows up here before anywhere else.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::alexander::{
    sum_alexander, sum_alexander_factored, torus_alexander_factored, torus_alexander_quotient,
};
use crate::cyclotomic::{cyclotomic, divisors};
use crate::knot::{KnotSum, TorusKnot};
use crate::obstruction::{obstruct, ObstructOptions};
use crate::parse::parse;
use crate::poly::IntPoly;
use crate::seifert::{numeric_signature, seifert_matrix};
use crate::signature::{candidate_angles, jump_spectrum, lattice_counts, signature_function};

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: u64,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn coprime_pairs(q_max: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for p in 2..q_max {
        for q in (p + 1)..=q_max {
            if p.gcd(&q) == 1 {
                pairs.push((p, q));
            }
        }
    }
    pairs
}

fn sample_sums() -> Vec<KnotSum> {
    [
        "T(2,3)",
        "-T(2,3)",
        "T(4,5) # T(4,5)",
        "T(2,5) # -T(2,3)",
        "T(2,9) # -T(2,3)",
        "-T(3,4) # -T(4,5) # T(5,6)",
        "T(2,3) # -T(2,3)",
        "T(2,3) # T(3,4) # T(5,6)",
        "T(3,5) # T(3,5) # -T(2,7)",
    ]
    .iter()
    .map(|s| parse(s).expect("fixed sample expressions parse"))
    .collect()
}

/// prod over d | n of phi_d = t^n - 1, for n up to 200.
pub fn cyclotomic_identity() -> SuiteResult {
    let mut result = SuiteResult::new("cyclotomic-identity");
    for n in 1..=200u64 {
        result.cases += 1;
        let mut product = IntPoly::one();
        for d in divisors(n) {
            product = &product * &cyclotomic(d);
        }
        if product != IntPoly::power_minus_one(n as usize) {
            result
                .failures
                .push(format!("product of phi_d over d | {n}"));
        }
    }
    result
}

/// Quotient route equals expanded divisor-pair route for p < q <= 30.
pub fn factorization_routes() -> SuiteResult {
    let mut result = SuiteResult::new("factorization-routes");
    for (p, q) in coprime_pairs(30) {
        result.cases += 1;
        let knot = TorusKnot::new(p, q).unwrap();
        if torus_alexander_quotient(&knot) != torus_alexander_factored(&knot).expand() {
            result.failures.push(format!("T({p},{q})"));
        }
    }
    result
}

/// Palindromicity, value 1 at t = 1, and degree (p-1)(q-1), for torus
/// knots up to q = 30 and the fixed sample sums.
pub fn alexander_basics() -> SuiteResult {
    let mut result = SuiteResult::new("alexander-basics");
    for (p, q) in coprime_pairs(30) {
        result.cases += 1;
        let delta = torus_alexander_quotient(&TorusKnot::new(p, q).unwrap());
        if !delta.is_palindromic()
            || !delta.eval_at_one().is_one()
            || delta.degree() != Some(((p - 1) * (q - 1)) as usize)
        {
            result.failures.push(format!("T({p},{q})"));
        }
    }
    for sum in sample_sums() {
        result.cases += 1;
        let delta = sum_alexander(&sum);
        if !delta.is_palindromic() || !delta.eval_at_one().is_one() {
            result.failures.push(sum.to_string());
        }
    }
    result
}

/// At every candidate angle of the form 1/r the jump is nonpositive and
/// there is no lattice point at height 1/r at all, for p < q <= 30.
pub fn smallest_angle_jumps() -> SuiteResult {
    let mut result = SuiteResult::new("reciprocal-angle-jumps");
    for (p, q) in coprime_pairs(30) {
        for x in candidate_angles(p, q) {
            if x.numerator() != 1 {
                continue;
            }
            result.cases += 1;
            let (s_minus, s_plus) = lattice_counts(p, q, x);
            if s_minus != 0 || (s_minus as i64 - s_plus as i64) > 0 {
                result.failures.push(format!("T({p},{q}) at {x}"));
            }
        }
    }
    result
}

/// Antisymmetry, zero total, and the order bound: |J(a/b)| never exceeds
/// the multiplicity of phi_b in the Alexander factorization and agrees
/// with it mod 2.
pub fn spectrum_properties() -> SuiteResult {
    let mut result = SuiteResult::new("spectrum-properties");
    for sum in sample_sums() {
        result.cases += 1;
        let spectrum = jump_spectrum(&sum);
        let factored = sum_alexander_factored(&sum);
        if spectrum.total() != 0 {
            result
                .failures
                .push(format!("{sum}: jumps sum to {}", spectrum.total()));
            continue;
        }
        for (x, j) in spectrum.iter() {
            if spectrum.jump_at(&x.complement()) != -j {
                result.failures.push(format!("{sum}: asymmetry at {x}"));
            }
            let mult = factored.exponent(x.denominator() as u64) as i64;
            if j.abs() > mult || (mult - j.abs()) % 2 != 0 {
                result.failures.push(format!(
                    "{sum}: |J({x})| = {} vs multiplicity {mult}",
                    j.abs()
                ));
            }
        }
    }
    result
}

/// Spectrum of a sum is the pointwise sum of spectra; mirroring negates;
/// the obstruction pipeline does not care about summand order.
pub fn additivity_mirror() -> SuiteResult {
    let mut result = SuiteResult::new("additivity-mirror");
    let sums = sample_sums();
    for a in &sums {
        for b in &sums {
            result.cases += 1;
            let mut joined = a.summands().to_vec();
            joined.extend_from_slice(b.summands());
            let joined = KnotSum::new(joined).unwrap();
            let spectrum = jump_spectrum(&joined);
            let (sa, sb) = (jump_spectrum(a), jump_spectrum(b));
            let mut angles: Vec<_> = sa.angles().chain(sb.angles()).copied().collect();
            angles.sort();
            angles.dedup();
            for x in angles {
                if spectrum.jump_at(&x) != sa.jump_at(&x) + sb.jump_at(&x) {
                    result.failures.push(format!("{a} + {b} at {x}"));
                }
            }
        }
    }
    for sum in &sums {
        result.cases += 1;
        let mirrored = KnotSum::new(sum.summands().iter().map(|k| k.mirror()).collect()).unwrap();
        let (s, m) = (jump_spectrum(sum), jump_spectrum(&mirrored));
        let same_support = s.len() == m.len();
        let negated = s.iter().all(|(x, j)| m.jump_at(x) == -j);
        if !same_support || !negated {
            result.failures.push(format!("mirror of {sum}"));
        }
    }
    for sum in &sums {
        if sum.len() < 2 {
            continue;
        }
        result.cases += 1;
        let mut reversed = sum.summands().to_vec();
        reversed.reverse();
        let reversed = KnotSum::new(reversed).unwrap();
        let (a, b) = (
            obstruct(sum, ObstructOptions::default()),
            obstruct(&reversed, ObstructOptions::default()),
        );
        if a.verdict != b.verdict
            || a.tau != b.tau
            || a.forced_factor != b.forced_factor
            || a.alexander != b.alexander
        {
            result.failures.push(format!("reorder of {sum}"));
        }
    }
    result
}

/// Top of the expansion for positive sums: each factor starts t^k - t^(k-1),
/// so the product starts t^d - n t^(d-1) with n the number of summands.
pub fn leading_term_shape() -> SuiteResult {
    let mut result = SuiteResult::new("leading-terms");
    let sums = [
        "T(2,3) # T(2,5)",
        "T(4,5) # T(4,5)",
        "T(2,3) # T(2,5) # T(2,7)",
        "T(3,4) # T(4,5) # T(5,6)",
        "T(2,3) # T(2,3) # T(2,3) # T(2,3)",
        "T(3,5) # T(2,7) # T(4,9) # T(5,8) # T(2,11)",
    ];
    for expr in sums {
        result.cases += 1;
        let sum = parse(expr).unwrap();
        let delta = sum_alexander(&sum);
        let top = delta.leading_terms(2).unwrap();
        let n = sum.len() as i64;
        if top != [BigInt::from(1), BigInt::from(-n)] {
            result.failures.push(format!("{sum}: top terms {:?}", top));
        }
    }
    result
}

/// Numeric eigenvalue route agrees with the exact lattice route on every
/// interval between candidate angles, for all coprime p < q <= q_max.
pub fn oracle_equivalence(q_max: u32, tolerance: f64) -> SuiteResult {
    let mut result = SuiteResult::new("oracle-equivalence");
    for (p, q) in coprime_pairs(q_max) {
        let knot = KnotSum::single(TorusKnot::new(p, q).unwrap());
        let exact = signature_function(&knot);
        let matrix = seifert_matrix(p, q);
        let mut ends = vec![0.0];
        ends.extend(candidate_angles(p, q).iter().map(|x| x.as_f64()));
        ends.push(1.0);
        for (i, w) in ends.windows(2).enumerate() {
            result.cases += 1;
            let mid = (w[0] + w[1]) / 2.0;
            match numeric_signature(&matrix, mid, tolerance) {
                Ok(numeric) => {
                    if numeric != exact.interval_values()[i] {
                        result.failures.push(format!(
                            "T({p},{q}) at t = {mid}: numeric {numeric}, exact {}",
                            exact.interval_values()[i]
                        ));
                    }
                }
                Err(e) => result.failures.push(format!("T({p},{q}): {e}")),
            }
        }
    }
    result
}

/// Every suite at the ranges the library promises, oracle included.
pub fn run_all(tolerance: f64) -> Vec<SuiteResult> {
    vec![
        cyclotomic_identity(),
        factorization_routes(),
        alexander_basics(),
        smallest_angle_jumps(),
        spectrum_properties(),
        additivity_mirror(),
        leading_term_shape(),
        oracle_equivalence(8, tolerance),
    ]
}
