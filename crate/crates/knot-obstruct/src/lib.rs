//! Exact concordance invariants of connected sums of torus knots.
//!
//! The library computes Alexander polynomials (with their cyclotomic
//! factorizations), Levine-Tristram signature jump functions, and tau for
//! knots of the form `±T(p1,q1) # ... # ±T(pn,qn)`, and uses them to decide
//! whether such a sum can be concordant to an L-space knot. All invariant
//! computations are exact; floating point appears only in a numeric
//! eigenvalue oracle used to cross-check the exact signature route.

pub mod alexander;
pub mod angle;
pub mod cyclotomic;
pub mod knot;
pub mod obstruction;
pub mod parse;
pub mod poly;
pub mod render;
pub mod report;
pub mod seifert;
pub mod selftest;
pub mod signature;

pub use angle::RationalAngle;
pub use cyclotomic::CyclotomicFactorization;
pub use knot::{KnotSum, Sign, TorusKnot};
pub use poly::IntPoly;
pub use signature::{JumpSpectrum, StepFunction};
