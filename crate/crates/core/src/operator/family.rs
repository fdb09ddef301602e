use num_complex::Complex64;

use super::{BoundaryCondition, Grid, HermitianMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModelId {
    RotorGaugeA,
    RotorGaugeB,
    RadialLog,
}

impl ModelId {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::RotorGaugeA => "rotor-gauge-a",
            Self::RotorGaugeB => "rotor-gauge-b",
            Self::RadialLog => "radial-log",
        }
    }
}

impl std::fmt::Display for ModelId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Physical constants. Matrices are always built with `ħ = m = 1`; these only
/// rescale reported energies by `ħ²/m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub hbar: f64,
    pub mass: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Self { hbar: 1.0, mass: 1.0 }
    }
}

impl Constants {
    pub fn energy_scale(&self) -> f64 {
        self.hbar * self.hbar / self.mass
    }
}

/// A map `λ ↦ H(λ)` together with the discretized formal derivative `∂H/∂λ`
/// of the bulk operator expression (boundary data ignored).
pub trait OperatorFamily: Send + Sync {
    fn model(&self) -> ModelId;

    fn grid(&self) -> &Grid;

    fn constants(&self) -> Constants {
        Constants::default()
    }

    fn build(&self, lambda: f64) -> Result<HermitianMatrix>;

    fn formal_derivative(&self, lambda: f64) -> Result<HermitianMatrix>;

    /// Closed-form entrywise `dM/dλ`, if the family has one.
    fn analytic_derivative(&self, lambda: f64) -> Option<Result<HermitianMatrix>>;

    /// The λ-dependent boundary condition of the domain.
    fn boundary(&self, lambda: f64) -> Result<BoundaryCondition>;

    /// Bulk stencil at `lambda_bulk` closed with the boundary data of
    /// `lambda_domain`: the extension of `H(lambda_bulk)` to vectors that
    /// satisfy the boundary conditions of `lambda_domain`.
    /// `extended(λ, λ) == build(λ)`.
    fn extended(&self, lambda_bulk: f64, lambda_domain: f64) -> Result<HermitianMatrix>;

    /// Continuum energy of mode `n`, used as a spectral shift.
    fn energy_guess(&self, lambda: f64, mode: i64) -> Option<f64>;

    /// Sampled analytic eigenvector of mode `n`, unit norm, when one is known.
    fn reference_mode(&self, lambda: f64, mode: i64) -> Option<Vec<Complex64>>;

    /// Rejects parameter values too close to a level crossing of `mode`.
    fn check_guard(&self, lambda: f64, mode: i64) -> Result<()>;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DerivativeRule {
    /// Closed-form entry derivatives; errors if the family has none.
    Analytic,
    /// `(M(λ+δ) − M(λ−δ)) / 2δ`, entrywise.
    CentralDifference(f64),
    /// Analytic when available, else central difference with this step.
    Auto(f64),
}

/// Entrywise total derivative `dM/dλ`, including the boundary rows.
pub fn total_matrix_derivative(
    family: &dyn OperatorFamily,
    lambda: f64,
    rule: DerivativeRule,
) -> Result<HermitianMatrix> {
    let central = |delta: f64| -> Result<HermitianMatrix> {
        if !(delta > 0.0) {
            return Err(Error::InvalidStep(delta));
        }
        let plus = family.build(lambda + delta)?;
        let minus = family.build(lambda - delta)?;
        Ok(plus.scaled_add(-1.0, &minus)?.scale(0.5 / delta))
    };
    match rule {
        DerivativeRule::Analytic => family
            .analytic_derivative(lambda)
            .unwrap_or(Err(Error::Unsupported("no analytic matrix derivative"))),
        DerivativeRule::CentralDifference(delta) => central(delta),
        DerivativeRule::Auto(delta) => family.analytic_derivative(lambda).unwrap_or_else(|| central(delta)),
    }
}
