use std::f64::consts::PI;

use super::bessel::{bessel_k0, bessel_k1};
use crate::error::{Error, Result};
use crate::operator::Grid;

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidKappa(alpha))
    }
}

/// `Ψ₀(r) = (α/√π) K₀(αr)`, normalized against `2πr dr`.
pub fn radial_ground_state(alpha: f64, r: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(alpha / PI.sqrt() * bessel_k0(alpha * r)?)
}

/// `∂_α Ψ₀(α, r) = (K₀(αr) − αr K₁(αr)) / √π`.
pub fn radial_ground_state_alpha_derivative(alpha: f64, r: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let x = alpha * r;
    Ok((bessel_k0(x)? - x * bessel_k1(x)?) / PI.sqrt())
}

pub fn radial_energy_exact(alpha: f64) -> f64 {
    -0.5 * alpha * alpha
}

pub fn radial_anomaly_exact(alpha: f64) -> f64 {
    -alpha
}

/// Max-norm of `∂_αΨ₀ − (1/α)(1 + r∂_r)Ψ₀` over interior grid points.
///
/// `∂_αΨ₀` is evaluated through `K₁`; `r∂_rΨ₀` by a sixth-order central
/// difference of `K₀`, so the two sides are computed independently.
pub fn dilation_relation_residual(alpha: f64, grid: &Grid) -> Result<f64> {
    dilation_residual_with(alpha, grid, 1.0)
}

/// Same residual for the rescaled state `cΨ₀`.
pub fn dilation_residual_with(alpha: f64, grid: &Grid, scale: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if grid.is_periodic() {
        return Err(Error::WrongGridKind { expected: "radial" });
    }
    let pts = grid.points();
    let mut worst: f64 = 0.0;
    for &r in &pts[1..pts.len() - 1] {
        let lhs = scale * radial_ground_state_alpha_derivative(alpha, r)?;
        let f = |s: f64| radial_ground_state(alpha, s).map(|v| scale * v);
        let h = 1e-3 * r;
        let d = (-f(r - 3.0 * h)? + 9.0 * f(r - 2.0 * h)? - 45.0 * f(r - h)? + 45.0 * f(r + h)?
            - 9.0 * f(r + 2.0 * h)?
            + f(r + 3.0 * h)?)
            / (60.0 * h);
        let rhs = (f(r)? + r * d) / alpha;
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// Closed-form data of the radial bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialReference {
    pub alpha: f64,
}

impl RadialReference {
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self { alpha })
    }

    pub fn energy(&self) -> f64 {
        radial_energy_exact(self.alpha)
    }

    pub fn wavefunction(&self, r: f64) -> Result<f64> {
        radial_ground_state(self.alpha, r)
    }

    /// `Ψ₀′(r) = −(α²/√π) K₁(αr)`.
    pub fn wavefunction_derivative(&self, r: f64) -> Result<f64> {
        Ok(-self.alpha * self.alpha / PI.sqrt() * bessel_k1(self.alpha * r)?)
    }

    pub fn alpha_derivative(&self, r: f64) -> Result<f64> {
        radial_ground_state_alpha_derivative(self.alpha, r)
    }

    pub fn anomaly(&self) -> f64 {
        radial_anomaly_exact(self.alpha)
    }
}
