//! Levine-Tristram signature data for sums of torus knots, computed exactly.
//!
//! Everything here works with rational angles and integer jump counts; the
//! floating-point eigenvalue route in `seifert` exists only to cross-check
//! this module.

use std::collections::BTreeMap;

use crate::angle::RationalAngle;
use crate::knot::KnotSum;

/// The angles k/(pq) with 0 < k < pq where p does not divide k and q does
/// not divide k. These are exactly the points where the signature of T(p,q)
/// can jump, and for a torus knot every one of them carries a jump of -1 or
/// +1. Returned reduced and in increasing order; there are (p-1)(q-1) of
/// them.
pub fn candidate_angles(p: u32, q: u32) -> Vec<RationalAngle> {
    let (p, q) = (p as i64, q as i64);
    let pq = p * q;
    let mut out = Vec::with_capacity(((p - 1) * (q - 1)) as usize);
    for k in 1..pq {
        if k % p != 0 && k % q != 0 {
            out.push(RationalAngle::new(k, pq).expect("0 < k < pq"));
        }
    }
    out
}

/// Number of lattice points (i,j) with 0 < i < p, 0 < j < q and
/// i/p + j/q == num/den, all arithmetic exact.
fn count_solutions(p: i64, q: i64, num: i64, den: i64) -> usize {
    let (p, q, num, den) = (p as i128, q as i128, num as i128, den as i128);
    let mut count = 0;
    for i in 1..p {
        // i/p + j/q == num/den  <=>  j * p * den == num * p * q - i * q * den
        let rhs = num * p * q - i * q * den;
        let d = p * den;
        if rhs > 0 && rhs % d == 0 && rhs / d < q {
            count += 1;
        }
    }
    count
}

/// Counts (s_minus, s_plus) of lattice points (i,j), 0 < i < p, 0 < j < q,
/// with i/p + j/q equal to x (s_minus) or to 1 + x (s_plus).
pub fn lattice_counts(p: u32, q: u32, x: RationalAngle) -> (usize, usize) {
    let (a, b) = (x.numerator(), x.denominator());
    let s_minus = count_solutions(p as i64, q as i64, a, b);
    let s_plus = count_solutions(p as i64, q as i64, a + b, b);
    (s_minus, s_plus)
}

/// Jump of the signature function of T(p,q) at the angle x, i.e. half the
/// difference of the one-sided limits. Equals s_minus - s_plus.
pub fn litherland_jump(p: u32, q: u32, x: RationalAngle) -> i64 {
    let (s_minus, s_plus) = lattice_counts(p, q, x);
    s_minus as i64 - s_plus as i64
}

/// Full jump set of a single positive T(p,q), computed in one O(pq) sweep
/// over the lattice rather than angle by angle.
fn torus_spectrum(p: u32, q: u32) -> BTreeMap<RationalAngle, i64> {
    let (p, q) = (p as i64, q as i64);
    let pq = p * q;
    let mut map = BTreeMap::new();
    for i in 1..p {
        for j in 1..q {
            // i/p + j/q = k/(pq); k = pq is impossible since gcd(p,q) = 1.
            let k = i * q + j * p;
            if k < pq {
                *map.entry(RationalAngle::new(k, pq).unwrap()).or_insert(0) += 1;
            } else {
                *map.entry(RationalAngle::new(k - pq, pq).unwrap())
                    .or_insert(0) -= 1;
            }
        }
    }
    map
}

/// Jump function of a knot sum: angle -> half-jump of the signature there.
/// Angles whose contributions cancel across summands are absent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpSpectrum {
    jumps: BTreeMap<RationalAngle, i64>,
}

impl JumpSpectrum {
    pub fn is_empty(&self) -> bool {
        self.jumps.is_empty()
    }

    /// Number of angles with a nonzero jump (the singular points of the
    /// signature function).
    pub fn len(&self) -> usize {
        self.jumps.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&RationalAngle, &i64)> {
        self.jumps.iter()
    }

    /// Jump at x, zero if x is not a singular point.
    pub fn jump_at(&self, x: &RationalAngle) -> i64 {
        self.jumps.get(x).copied().unwrap_or(0)
    }

    pub fn angles(&self) -> impl Iterator<Item = &RationalAngle> {
        self.jumps.keys()
    }

    /// Largest |jump| among angles with the given reduced denominator,
    /// zero if no such angle is singular.
    pub fn max_abs_jump_with_denominator(&self, den: i64) -> i64 {
        self.jumps
            .iter()
            .filter(|(x, _)| x.denominator() == den)
            .map(|(_, j)| j.abs())
            .max()
            .unwrap_or(0)
    }

    /// Sum of all jumps; always zero because the signature returns to zero
    /// as the angle approaches 1.
    pub fn total(&self) -> i64 {
        self.jumps.values().sum()
    }
}

/// Jump spectrum of a connected sum: the spectra of the summands, mirrored
/// summands negated, added pointwise.
pub fn jump_spectrum(sum: &KnotSum) -> JumpSpectrum {
    let mut jumps: BTreeMap<RationalAngle, i64> = BTreeMap::new();
    for knot in sum.summands() {
        let s = knot.sign().factor();
        for (x, j) in torus_spectrum(knot.p(), knot.q()) {
            *jumps.entry(x).or_insert(0) += s * j;
        }
    }
    jumps.retain(|_, j| *j != 0);
    JumpSpectrum { jumps }
}

/// Number of singular points of the signature function of the sum.
pub fn singular_point_count(sum: &KnotSum) -> usize {
    jump_spectrum(sum).len()
}

/// Integer-valued step function on (0,1), constant between consecutive
/// breakpoints. `values` has one more entry than `breakpoints`; the first
/// entry is the value on (0, x_1) and is always zero for a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFunction {
    breakpoints: Vec<RationalAngle>,
    values: Vec<i64>,
}

impl StepFunction {
    pub fn from_jumps(spectrum: &JumpSpectrum) -> StepFunction {
        let mut breakpoints = Vec::with_capacity(spectrum.len());
        let mut values = Vec::with_capacity(spectrum.len() + 1);
        let mut v = 0;
        values.push(v);
        for (x, j) in spectrum.iter() {
            breakpoints.push(*x);
            v += 2 * j;
            values.push(v);
        }
        StepFunction {
            breakpoints,
            values,
        }
    }

    pub fn breakpoints(&self) -> &[RationalAngle] {
        &self.breakpoints
    }

    pub fn interval_values(&self) -> &[i64] {
        &self.values
    }

    /// Value at x: the constant value of the surrounding interval, or the
    /// average of the two one-sided limits when x is a breakpoint.
    pub fn value_at(&self, x: &RationalAngle) -> i64 {
        match self.breakpoints.binary_search(x) {
            Ok(i) => (self.values[i] + self.values[i + 1]) / 2,
            Err(i) => self.values[i],
        }
    }
}

/// Signature function of the sum as an explicit step function.
pub fn signature_function(sum: &KnotSum) -> StepFunction {
    StepFunction::from_jumps(&jump_spectrum(sum))
}

/// Signature of the sum at a single angle, with the average convention at
/// jump points.
pub fn signature_at(sum: &KnotSum, x: &RationalAngle) -> i64 {
    signature_function(sum).value_at(x)
}

/// Litherland jump route restricted to one torus knot, as a spectrum.
/// Exists so tests can compare it against the sweep in `torus_spectrum`.
#[cfg(test)]
fn torus_spectrum_by_angle(knot: &crate::knot::TorusKnot) -> BTreeMap<RationalAngle, i64> {
    let mut map = BTreeMap::new();
    for x in candidate_angles(knot.p(), knot.q()) {
        let j = litherland_jump(knot.p(), knot.q(), x);
        if j != 0 {
            map.insert(x, j);
        }
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{Sign, TorusKnot};

    fn angle(num: i64, den: i64) -> RationalAngle {
        RationalAngle::new(num, den).unwrap()
    }

    fn sum(terms: &[(i64, u32, u32)]) -> KnotSum {
        KnotSum::new(
            terms
                .iter()
                .map(|&(s, p, q)| {
                    let sign = if s >= 0 {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    };
                    TorusKnot::with_sign(sign, p, q).unwrap()
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn trefoil_candidates() {
        let c = candidate_angles(2, 3);
        assert_eq!(c, vec![angle(1, 6), angle(5, 6)]);
    }

    #[test]
    fn candidate_count_is_degree() {
        for &(p, q) in &[(2u32, 3u32), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)] {
            let c = candidate_angles(p, q);
            assert_eq!(c.len() as u64, ((p - 1) * (q - 1)) as u64);
        }
    }

    #[test]
    fn trefoil_lattice_counts() {
        assert_eq!(lattice_counts(2, 3, angle(1, 6)), (0, 1));
        assert_eq!(lattice_counts(2, 3, angle(5, 6)), (1, 0));
        assert_eq!(litherland_jump(2, 3, angle(1, 6)), -1);
        assert_eq!(litherland_jump(2, 3, angle(5, 6)), 1);
    }

    #[test]
    fn jump_at_smallest_angle_is_negative() {
        // No lattice point solves i/p + j/q = 1/(pq), so the jump at the
        // smallest candidate angle can only be <= 0; for torus knots it
        // is exactly -1.
        for &(p, q) in &[(2u32, 3u32), (2, 9), (3, 4), (3, 7), (4, 5), (5, 6)] {
            let x = angle(1, (p as i64) * (q as i64));
            let (s_minus, s_plus) = lattice_counts(p, q, x);
            assert_eq!(s_minus, 0);
            assert_eq!(s_plus, 1);
        }
    }

    #[test]
    fn torus_jumps_are_unit_on_every_candidate() {
        for &(p, q) in &[(2u32, 3u32), (2, 7), (3, 4), (3, 5), (4, 5), (5, 6)] {
            let spectrum = torus_spectrum(p, q);
            let candidates = candidate_angles(p, q);
            assert_eq!(spectrum.len(), candidates.len());
            for x in candidates {
                let j = *spectrum.get(&x).unwrap();
                assert!(j == 1 || j == -1, "T({p},{q}) jump at {x} is {j}");
            }
        }
    }

    #[test]
    fn sweep_agrees_with_angle_by_angle() {
        for &(p, q) in &[(2u32, 3u32), (2, 9), (3, 7), (4, 5), (5, 6)] {
            let knot = TorusKnot::new(p, q).unwrap();
            assert_eq!(torus_spectrum(p, q), torus_spectrum_by_angle(&knot));
        }
    }

    #[test]
    fn t37_jump_at_1_over_21() {
        assert_eq!(litherland_jump(3, 7, angle(1, 21)), -1);
    }

    #[test]
    fn mirror_negates_jumps() {
        let k = sum(&[(1, 2, 3)]);
        let m = sum(&[(-1, 2, 3)]);
        assert_eq!(jump_spectrum(&k).jump_at(&angle(1, 6)), -1);
        assert_eq!(jump_spectrum(&m).jump_at(&angle(1, 6)), 1);
    }

    #[test]
    fn knot_minus_itself_has_empty_spectrum() {
        let s = sum(&[(1, 2, 3), (-1, 2, 3)]);
        assert!(jump_spectrum(&s).is_empty());
        assert_eq!(singular_point_count(&s), 0);
    }

    #[test]
    fn spectrum_is_antisymmetric_and_sums_to_zero() {
        let s = sum(&[(1, 3, 4), (-1, 2, 5), (1, 2, 3)]);
        let spectrum = jump_spectrum(&s);
        assert_eq!(spectrum.total(), 0);
        for (x, j) in spectrum.iter() {
            assert_eq!(spectrum.jump_at(&x.complement()), -j);
        }
    }

    #[test]
    fn partial_cancellation_leaves_phi18_angles() {
        // T(2,9) # -T(2,3): the den-6 jumps cancel, six den-18 angles stay.
        let s = sum(&[(1, 2, 9), (-1, 2, 3)]);
        let spectrum = jump_spectrum(&s);
        assert_eq!(spectrum.len(), 6);
        for k in [1, 5, 7] {
            assert_eq!(spectrum.jump_at(&angle(k, 18)), -1);
            assert_eq!(spectrum.jump_at(&angle(18 - k, 18)), 1);
        }
        assert_eq!(spectrum.max_abs_jump_with_denominator(6), 0);
        assert_eq!(spectrum.max_abs_jump_with_denominator(18), 1);
    }

    #[test]
    fn mixed_example_singular_points() {
        // -T(3,4) # -T(4,5) # T(5,6): 34 distinct candidate angles, and the
        // four shared denominator-10 angles all cancel (both T(4,5) and
        // T(5,6) jump by -1 at 1/10 and 3/10, entering with opposite signs).
        let s = sum(&[(-1, 3, 4), (-1, 4, 5), (1, 5, 6)]);
        let spectrum = jump_spectrum(&s);
        assert_eq!(spectrum.len(), 30);
        assert_eq!(spectrum.max_abs_jump_with_denominator(10), 0);
        assert_eq!(litherland_jump(4, 5, angle(1, 10)), -1);
        assert_eq!(litherland_jump(5, 6, angle(1, 10)), -1);
    }

    #[test]
    fn trefoil_step_function() {
        let f = signature_function(&sum(&[(1, 2, 3)]));
        assert_eq!(f.breakpoints(), &[angle(1, 6), angle(5, 6)]);
        assert_eq!(f.interval_values(), &[0, -2, 0]);
        assert_eq!(f.value_at(&angle(1, 2)), -2);
        assert_eq!(f.value_at(&angle(1, 6)), -1);
        assert_eq!(f.value_at(&angle(1, 100)), 0);
    }

    #[test]
    fn signature_is_additive() {
        let parts = [sum(&[(1, 2, 5)]), sum(&[(-1, 3, 4)])];
        let whole = sum(&[(1, 2, 5), (-1, 3, 4)]);
        for x in [angle(1, 7), angle(1, 4), angle(1, 2), angle(9, 20)] {
            let split: i64 = parts.iter().map(|k| signature_at(k, &x)).sum();
            assert_eq!(signature_at(&whole, &x), split);
        }
    }

    #[test]
    fn t25_signature_at_half() {
        assert_eq!(signature_at(&sum(&[(1, 2, 5)]), &angle(1, 2)), -4);
    }
}
