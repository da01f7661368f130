//! Numeric signature oracle backed by an explicit Seifert matrix.
//!
//! This is the floating-point side of the cross-check: the exact lattice
//! route in `signature` is the implementation of record, and these
//! eigenvalue computations only corroborate it.

use nalgebra::DMatrix;
use thiserror::Error;

/// Relative eigenvalue threshold below which the hermitian form is treated
/// as degenerate instead of sign-classified.
pub const DEFAULT_DEGENERACY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum SeifertError {
    #[error("hermitian form near-degenerate at t = {t}: |eigenvalue| {min_abs:.3e} under threshold {threshold:.3e}")]
    NearDegenerate {
        t: f64,
        min_abs: f64,
        threshold: f64,
    },
}

/// Integer Seifert matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.size + col]
    }
}

/// Seifert matrix of the positive torus knot T(p,q), from the fence
/// diagram of the closed braid (s_1 s_2 ... s_{p-1})^q.
///
/// Basis: generator (i,j) is the cycle through bands j and j+1 of gap i,
/// for 1 <= i <= p-1 and 1 <= j <= q-1, rows ordered gap-major. Linking
/// convention, read in one direction only: each generator has
/// self-linking -1, links the next generator in its own gap with +1, the
/// same-level generator in the next gap with +1, and the one a level
/// down in the next gap with -1. Calibrated so the form of T(2,3) at
/// t = 1/2 has signature -2.
pub fn seifert_matrix(p: u32, q: u32) -> SeifertMatrix {
    let (p, q) = (p as usize, q as usize);
    debug_assert!(2 <= p && p < q);
    let per_gap = q - 1;
    let size = (p - 1) * per_gap;
    let mut entries = vec![0i64; size * size];
    let idx = |gap: usize, level: usize| gap * per_gap + level;
    let mut set = |r: usize, c: usize, v: i64| entries[r * size + c] = v;
    for gap in 0..p - 1 {
        for level in 0..per_gap {
            let a = idx(gap, level);
            set(a, a, -1);
            if level + 1 < per_gap {
                set(a, idx(gap, level + 1), 1);
            }
            if gap + 1 < p - 1 {
                set(a, idx(gap + 1, level), 1);
                if level > 0 {
                    set(a, idx(gap + 1, level - 1), -1);
                }
            }
        }
    }
    SeifertMatrix { size, entries }
}

/// Signature of the hermitian form (1-w)V + (1-w̄)V^T at w = e^{2 pi i t},
/// by eigenvalue count. Any eigenvalue within `tolerance` of zero,
/// relative to the largest, makes the form near-degenerate and is an
/// error rather than a sign call.
///
/// With w = c + is the form splits as A + iB with A = (1-c)(V + V^T)
/// symmetric and B = s(V^T - V) antisymmetric, and the real embedding
/// [[A, -B], [B, A]] is a symmetric matrix carrying each eigenvalue of
/// the form twice.
pub fn numeric_signature(v: &SeifertMatrix, t: f64, tolerance: f64) -> Result<i64, SeifertError> {
    let n = v.size();
    let (sin, cos) = (2.0 * std::f64::consts::PI * t).sin_cos();
    let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let a = (1.0 - cos) * (v.entry(r, c) + v.entry(c, r)) as f64;
            let b = sin * (v.entry(c, r) - v.entry(r, c)) as f64;
            m[(r, c)] = a;
            m[(n + r, n + c)] = a;
            m[(r, n + c)] = -b;
            m[(n + r, c)] = b;
        }
    }
    let eigen = m.symmetric_eigen();
    let max_abs = eigen
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, &e| acc.max(e.abs()));
    let threshold = tolerance * max_abs;
    let mut signature = 0i64;
    for &e in eigen.eigenvalues.iter() {
        if e.abs() <= threshold {
            return Err(SeifertError::NearDegenerate {
                t,
                min_abs: e.abs(),
                threshold,
            });
        }
        signature += if e > 0.0 { 1 } else { -1 };
    }
    Ok(signature / 2)
}
