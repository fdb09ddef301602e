use crate::operator::ModelId;
use crate::Complex64;

/// Terms of `dE/dλ = ⟨∂H/∂λ⟩ + Δ` for one mode at one parameter value.
/// Energies in units with `ħ = m = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct HfReport {
    pub model: ModelId,
    pub lambda: f64,
    pub mode: i64,
    pub energy: f64,
    pub de_dlambda: f64,
    pub expectation_formal: f64,
    pub delta_matrix_route: f64,
    pub delta_boundary_route: Option<f64>,
    /// `|dE − ⟨∂H⟩ − Δ_matrix|`
    pub residual_generalized: f64,
    /// `|dE − ⟨∂H⟩|`
    pub residual_naive: f64,
    pub grid_size: usize,
    pub fd_step: f64,
}

impl HfReport {
    pub fn is_finite(&self) -> bool {
        [
            self.lambda,
            self.energy,
            self.de_dlambda,
            self.expectation_formal,
            self.delta_matrix_route,
            self.delta_boundary_route.unwrap_or(0.0),
            self.residual_generalized,
            self.residual_naive,
        ]
        .iter()
        .all(|v| v.is_finite())
    }
}

/// `(E(λ1) − E(λ2))⟨Ψ(λ2)|Ψ(λ1)⟩ = ⟨Ψ(λ2)|(H(λ1) − H(λ2))Ψ(λ1)⟩ + Δ(λ1, λ2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegratedReport {
    pub lambda1: f64,
    pub lambda2: f64,
    pub mode: i64,
    pub overlap: Complex64,
    pub lhs: Complex64,
    pub matrix_term: Complex64,
    pub delta_term: Complex64,
    pub residual: f64,
}

/// `(E_m − E_n)⟨Ψ_n|∂Ψ_m⟩ = ⟨Ψ_n|∂H Ψ_m⟩ + Δ_nm`.
#[derive(Debug, Clone, PartialEq)]
pub struct OffDiagReport {
    pub lambda: f64,
    pub n: i64,
    pub m: i64,
    pub lhs: Complex64,
    pub expectation_formal: Complex64,
    pub delta_nm: Complex64,
    pub residual: f64,
}
