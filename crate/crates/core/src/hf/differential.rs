use super::boundary::anomaly_boundary_route;
use super::real_part;
use super::reports::HfReport;
use crate::eigen::{dot, eigenvector_family, solve_mode, EigenPair};
use crate::error::{Error, Result};
use crate::operator::{total_matrix_derivative, DerivativeRule, HermitianMatrix, OperatorFamily};
use crate::Complex64;

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidStep(delta))
    }
}

/// Richardson-extrapolated central difference of the tracked eigenvalue,
/// `(4·D(δ/2) − D(δ)) / 3`.
pub fn energy_derivative(family: &dyn OperatorFamily, lambda: f64, n: i64, delta: f64) -> Result<f64> {
    check_delta(delta)?;
    family.check_guard(lambda, n)?;
    let e = |l: f64| solve_mode(family, l, n).map(|p| p.energy);
    let central = |h: f64| -> Result<f64> { Ok((e(lambda + h)? - e(lambda - h)?) / (2.0 * h)) };
    let coarse = central(delta)?;
    let fine = central(0.5 * delta)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

fn expectation_of(m: &HermitianMatrix, v: &[Complex64]) -> Result<f64> {
    real_part(m.sesquilinear(v, v), m.max_abs())
}

/// `⟨Ψ_n|K|Ψ_n⟩` for the discretized formal derivative `K`.
pub fn hf_expectation(family: &dyn OperatorFamily, lambda: f64, n: i64) -> Result<f64> {
    let pair = solve_mode(family, lambda, n)?;
    expectation_of(&family.formal_derivative(lambda)?, &pair.vector)
}

/// `⟨Ψ|dM/dλ|Ψ⟩` and `⟨Ψ|K|Ψ⟩`.
fn derivative_terms(
    family: &dyn OperatorFamily,
    lambda: f64,
    pair: &EigenPair,
    delta: f64,
) -> Result<(f64, f64)> {
    let dm = total_matrix_derivative(family, lambda, DerivativeRule::Auto(delta))?;
    let k = family.formal_derivative(lambda)?;
    Ok((expectation_of(&dm, &pair.vector)?, expectation_of(&k, &pair.vector)?))
}

/// `⟨Ψ|dM/dλ|Ψ⟩ − ⟨Ψ|K|Ψ⟩`: the part of the total matrix derivative that the
/// formal operator derivative misses.
pub fn anomaly_matrix_route(family: &dyn OperatorFamily, lambda: f64, n: i64, delta: f64) -> Result<f64> {
    check_delta(delta)?;
    let pair = solve_mode(family, lambda, n)?;
    let (total, formal) = derivative_terms(family, lambda, &pair, delta)?;
    Ok(total - formal)
}

/// `⟨ψ|M∂ψ⟩ − ⟨Mψ|∂ψ⟩`, which vanishes for any finite Hermitian matrix.
pub fn hermiticity_defect(m: &HermitianMatrix, psi: &[Complex64], dpsi: &[Complex64]) -> Complex64 {
    dot(psi, &m.apply(dpsi)) - dot(&m.apply(psi), dpsi)
}

/// All terms of the generalized identity for mode `n` at `lambda`.
pub fn check_generalized_hf(
    family: &dyn OperatorFamily,
    lambda: f64,
    n: i64,
    delta: f64,
) -> Result<HfReport> {
    check_delta(delta)?;
    let pair = solve_mode(family, lambda, n)?;
    let de = energy_derivative(family, lambda, n, delta)?;
    let (total, formal) = derivative_terms(family, lambda, &pair, delta)?;
    let delta_matrix = total - formal;
    let boundary = match anomaly_boundary_route(family.model(), lambda, n) {
        Ok(v) => Some(v),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(HfReport {
        model: family.model(),
        lambda,
        mode: n,
        energy: pair.energy,
        de_dlambda: de,
        expectation_formal: formal,
        delta_matrix_route: delta_matrix,
        delta_boundary_route: boundary,
        residual_generalized: (de - formal - delta_matrix).abs(),
        residual_naive: (de - formal).abs(),
        grid_size: family.grid().n_points(),
        fd_step: delta,
    })
}

/// Eigenvector derivative and the discrete Hermiticity defect of `M(λ)` on it.
pub fn hermiticity_null_test(
    family: &dyn OperatorFamily,
    lambda: f64,
    n: i64,
    delta: f64,
) -> Result<Complex64> {
    let fam = eigenvector_family(family, lambda, n, delta)?;
    let m = family.build(lambda)?;
    Ok(hermiticity_defect(&m, &fam.center.vector, &fam.derivative()))
}
