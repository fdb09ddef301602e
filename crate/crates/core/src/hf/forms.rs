use super::reports::{IntegratedReport, OffDiagReport};
use crate::eigen::{align_phase, dot, eigenvector_family, solve_mode};
use crate::error::{Error, Result};
use crate::operator::{total_matrix_derivative, DerivativeRule, OperatorFamily};

/// Discrete integrated form between `λ1` and `λ2` for mode `n`.
///
/// `H(λ2)` acting on `ψ(λ1)` is the family's extension: the `λ2` bulk stencil
/// closed with the boundary data of `λ1`.
pub fn integrated_form(
    family: &dyn OperatorFamily,
    lambda1: f64,
    lambda2: f64,
    n: i64,
) -> Result<IntegratedReport> {
    if lambda1 == lambda2 {
        return Err(Error::Precondition("integrated form needs λ1 ≠ λ2".into()));
    }
    let p1 = solve_mode(family, lambda1, n)?;
    let mut p2 = solve_mode(family, lambda2, n)?;
    if let Ok(v) = align_phase(&p1.vector, &p2.vector) {
        p2.vector = v;
    }
    let (psi1, psi2) = (&p1.vector, &p2.vector);
    let m1 = family.build(lambda1)?;
    let m2 = family.build(lambda2)?;
    let ext = family.extended(lambda2, lambda1)?;
    let overlap = dot(psi2, psi1);
    let lhs = overlap * (p1.energy - p2.energy);
    let ext_term = dot(psi2, &ext.apply(psi1));
    let matrix_term = dot(psi2, &m1.apply(psi1)) - ext_term;
    let delta_term = ext_term - dot(&m2.apply(psi2), psi1);
    Ok(IntegratedReport {
        lambda1,
        lambda2,
        mode: n,
        overlap,
        lhs,
        matrix_term,
        delta_term,
        residual: (lhs - matrix_term - delta_term).norm(),
    })
}

/// Discrete off-diagonal form for modes `n ≠ m`, with `∂ψ_m` from a central
/// difference of phase-aligned eigenvectors.
pub fn off_diagonal_form(
    family: &dyn OperatorFamily,
    lambda: f64,
    n: i64,
    m: i64,
    delta: f64,
) -> Result<OffDiagReport> {
    if n == m {
        return Err(Error::Precondition("off-diagonal form needs n ≠ m".into()));
    }
    let pn = solve_mode(family, lambda, n)?;
    let fam = eigenvector_family(family, lambda, m, delta)?;
    let dpsi = fam.derivative();
    let psi_m = &fam.center.vector;
    let mat = family.build(lambda)?;
    let k = family.formal_derivative(lambda)?;
    let dm = total_matrix_derivative(family, lambda, DerivativeRule::Auto(delta))?;
    let defect = dm.scaled_add(-1.0, &k)?;
    let lhs = dot(&pn.vector, &dpsi) * (fam.center.energy - pn.energy);
    let expectation = dot(&pn.vector, &k.apply(psi_m));
    let delta_nm = dot(&pn.vector, &mat.apply(&dpsi)) + dot(&pn.vector, &defect.apply(psi_m))
        - dot(&mat.apply(&pn.vector), &dpsi);
    Ok(OffDiagReport {
        lambda,
        n,
        m,
        lhs,
        expectation_formal: expectation,
        delta_nm,
        residual: (lhs - expectation - delta_nm).norm(),
    })
}
