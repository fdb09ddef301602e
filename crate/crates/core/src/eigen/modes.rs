use super::targeted::{eigenvalue_by_bisection, nearest_eigenpairs};
use super::{dot, EigenPair, MIN_MODE_OVERLAP};
use crate::error::{Error, Result};
use crate::operator::{ModelId, OperatorFamily};
use crate::Complex64;

pub const DEFAULT_STEP: f64 = 1e-5;
pub const MIN_STEP: f64 = 1e-7;
pub const MAX_STEP: f64 = 1e-2;

/// Pairs requested around the expected rotor level. Each rotor level has one
/// near partner (`n ↔ 2ε − n`), so four leaves room for both neighbours.
const ROTOR_CANDIDATES: usize = 4;

/// Pick mode `n` out of a list of eigenpairs.
///
/// Rotor: the pair with maximal overlap with the sampled analytic mode.
/// Radial: the `n`-th lowest energy.
pub fn select_mode(
    pairs: &[EigenPair],
    family: &dyn OperatorFamily,
    n: i64,
    lambda: f64,
) -> Result<EigenPair> {
    family.check_guard(lambda, n)?;
    let model = family.model();
    if model == ModelId::RadialLog {
        let mut sorted: Vec<&EigenPair> = pairs.iter().collect();
        sorted.sort_by(|a, b| a.energy.total_cmp(&b.energy));
        let idx = usize::try_from(n).map_err(|_| Error::ModeUnavailable { mode: n, model: model.as_str() })?;
        let p = sorted
            .get(idx)
            .ok_or(Error::ModeUnavailable { mode: n, model: model.as_str() })?;
        return Ok(EigenPair { mode: n, lambda: Some(lambda), ..(*p).clone() });
    }
    let reference = family
        .reference_mode(lambda, n)
        .ok_or(Error::ModeUnavailable { mode: n, model: model.as_str() })?;
    let (best, overlap) = pairs
        .iter()
        .map(|p| (p, dot(&reference, &p.vector).norm()))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or(Error::ModeUnavailable { mode: n, model: model.as_str() })?;
    if overlap < MIN_MODE_OVERLAP {
        return Err(Error::AmbiguousMode { mode: n, lambda, overlap });
    }
    Ok(EigenPair { mode: n, lambda: Some(lambda), ..best.clone() })
}

/// Eigenpair of mode `n` of `family.build(lambda)`, by a targeted solve.
pub fn solve_mode(family: &dyn OperatorFamily, lambda: f64, n: i64) -> Result<EigenPair> {
    family.check_guard(lambda, n)?;
    let m = family.build(lambda)?;
    let model = family.model();
    let start: Vec<Vec<Complex64>> = family.reference_mode(lambda, n).into_iter().collect();
    let pairs = if model == ModelId::RadialLog {
        let idx = usize::try_from(n).map_err(|_| Error::ModeUnavailable { mode: n, model: model.as_str() })?;
        let shift = eigenvalue_by_bisection(&m, idx)?;
        // The bisection value is the eigenvalue of the assembled matrix to
        // componentwise accuracy; quadratic forms of this graded matrix are not.
        let mut p = nearest_eigenpairs(&m, shift, 1, &start)?;
        p[0].energy = shift;
        p[0].mode = n;
        p[0].lambda = Some(lambda);
        return Ok(p.remove(0));
    } else {
        let shift = family
            .energy_guess(lambda, n)
            .ok_or(Error::ModeUnavailable { mode: n, model: model.as_str() })?;
        nearest_eigenpairs(&m, shift, ROTOR_CANDIDATES.min(m.dim() - 2), &start)?
    };
    select_mode(&pairs, family, n, lambda)
}

/// `e^{iφ}·target` with `⟨reference|result⟩` real and non-negative.
pub fn align_phase(reference: &[Complex64], target: &[Complex64]) -> Result<Vec<Complex64>> {
    let s = dot(reference, target);
    let overlap = s.norm();
    if !(overlap > 0.5) {
        return Err(Error::NearOrthogonal(overlap));
    }
    let phase = s.conj() / overlap;
    if (phase - 1.0).norm() <= 4.0 * f64::EPSILON {
        return Ok(target.to_vec());
    }
    Ok(target.iter().map(|v| v * phase).collect())
}

/// Mode `n` at `λ` and its phase-aligned neighbours at `λ ± δ`.
#[derive(Debug, Clone)]
pub struct EigenvectorFamily {
    pub center: EigenPair,
    pub plus: EigenPair,
    pub minus: EigenPair,
    pub delta: f64,
}

impl EigenvectorFamily {
    /// `(ψ(λ+δ) − ψ(λ−δ)) / 2δ`.
    pub fn derivative(&self) -> Vec<Complex64> {
        let s = 0.5 / self.delta;
        self.plus
            .vector
            .iter()
            .zip(&self.minus.vector)
            .map(|(a, b)| (a - b) * s)
            .collect()
    }
}

pub fn eigenvector_family(
    family: &dyn OperatorFamily,
    lambda: f64,
    n: i64,
    delta: f64,
) -> Result<EigenvectorFamily> {
    check_step(delta)?;
    let center = solve_mode(family, lambda, n)?;
    let aligned = |l: f64| -> Result<EigenPair> {
        let mut p = solve_mode(family, l, n)?;
        p.vector = align_phase(&center.vector, &p.vector)?;
        Ok(p)
    };
    let plus = aligned(lambda + delta)?;
    let minus = aligned(lambda - delta)?;
    Ok(EigenvectorFamily { center, plus, minus, delta })
}

/// Central difference of phase-aligned, mode-tracked eigenvectors.
pub fn eigenvector_derivative(
    family: &dyn OperatorFamily,
    lambda: f64,
    n: i64,
    delta: f64,
) -> Result<Vec<Complex64>> {
    Ok(eigenvector_family(family, lambda, n, delta)?.derivative())
}

fn check_step(delta: f64) -> Result<()> {
    if (MIN_STEP..=MAX_STEP).contains(&delta) {
        Ok(())
    } else {
        Err(Error::InvalidStep(delta))
    }
}
