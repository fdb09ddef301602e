//! Hermitian eigensolvers, mode labelling and eigenvector families.
//!
//! [`eigh`] is a full dense decomposition. The per-mode path used by the
//! Hellmann–Feynman engine ([`solve_mode`]) never forms a dense matrix: it
//! factors `M − σ` as a banded LU (after reordering the periodic wrap into the
//! band) and runs shift-invert subspace iteration around the expected level.

mod band;
mod dense;
mod modes;
mod targeted;

pub use band::{interleave_permutation, BandLu};
pub use dense::eigh;
pub use modes::{
    align_phase, eigenvector_derivative, eigenvector_family, select_mode, solve_mode,
    EigenvectorFamily, DEFAULT_STEP, MAX_STEP, MIN_STEP,
};
pub use targeted::{eigenvalue_by_bisection, nearest_eigenpairs, sturm_count};

use crate::operator::HermitianMatrix;
use crate::Complex64;

/// Minimum distance from a level crossing, in units of the parameter.
pub const DEGENERACY_GUARD: f64 = 1e-3;

/// Minimum overlap with the analytic mode for a rotor label to be accepted.
pub const MIN_MODE_OVERLAP: f64 = 0.9;

#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    /// Quantum number: signed for the rotor, `0` = ground for radial.
    /// Plain ascending index for unlabelled decompositions.
    pub mode: i64,
    pub energy: f64,
    /// Unit Euclidean norm.
    pub vector: Vec<Complex64>,
    pub lambda: Option<f64>,
}

impl EigenPair {
    pub fn norm(&self) -> f64 {
        norm(&self.vector)
    }

    /// `‖M v − E v‖₂`.
    pub fn residual(&self, m: &HermitianMatrix) -> f64 {
        let mv = m.apply(&self.vector);
        mv.iter()
            .zip(&self.vector)
            .map(|(a, b)| (a - b * self.energy).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Componentwise backward error
    /// `max_i |(Mv − Ev)_i| / (|M||v| + |E||v|)_i`.
    ///
    /// Small values mean `(E, v)` is an exact eigenpair of a matrix whose
    /// entries differ from `M` by that relative amount, which is the
    /// meaningful test for strongly graded matrices.
    pub fn backward_error(&self, m: &HermitianMatrix) -> f64 {
        backward_error(m, self.energy, &self.vector)
    }
}

pub(crate) fn backward_error(m: &HermitianMatrix, energy: f64, v: &[Complex64]) -> f64 {
    let mv = m.apply(v);
    let scale = m.apply_abs(v);
    let mut worst: f64 = 0.0;
    for i in 0..v.len() {
        let r = (mv[i] - v[i] * energy).norm();
        let d = scale[i] + energy.abs() * v[i].norm();
        if d > 0.0 {
            worst = worst.max(r / d);
        } else if r > 0.0 {
            return f64::INFINITY;
        }
    }
    worst
}

pub(crate) fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub(crate) fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn normalize(a: &mut [Complex64]) {
    let s = 1.0 / norm(a);
    for x in a.iter_mut() {
        *x *= s;
    }
}
