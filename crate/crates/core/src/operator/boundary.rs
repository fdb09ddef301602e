use std::f64::consts::{LN_2, TAU};

use crate::error::{Error, Result};
use crate::models::EULER_GAMMA;

/// Domain-of-definition data for a discretized operator.
#[derive(Debug, Clone, Copy)]
pub enum BoundaryCondition {
    Periodic,
    /// `f(0) = e^{iφ} f(2π)`, `f'(0) = e^{iφ} f'(2π)` with `φ = twist_phase`.
    TwistedPeriodic { twist_phase: f64 },
    /// `f(r) ~ a·(ln(κr) + γ_E − ln 2)` as `r → 0`, the domain in which
    /// `K₀(κr)` is an eigenfunction.
    LogAtOrigin { kappa: f64 },
    Dirichlet,
}

impl BoundaryCondition {
    /// Twisted boundary condition for flux `ε`, phase `2πε` reduced modulo `2π`.
    pub fn twisted_for_flux(epsilon: f64) -> Self {
        Self::twisted(TAU * epsilon)
    }

    pub fn twisted(twist_phase: f64) -> Self {
        Self::TwistedPeriodic {
            twist_phase: twist_phase.rem_euclid(TAU),
        }
    }

    pub fn log_at_origin(kappa: f64) -> Result<Self> {
        if !(kappa > 0.0) || !kappa.is_finite() {
            return Err(Error::InvalidKappa(kappa));
        }
        Ok(Self::LogAtOrigin { kappa })
    }

    /// Twist phase in `[0, 2π)`; `Periodic` is the zero twist.
    pub fn twist_phase(&self) -> Option<f64> {
        match *self {
            Self::Periodic => Some(0.0),
            Self::TwistedPeriodic { twist_phase } => Some(twist_phase.rem_euclid(TAU)),
            _ => None,
        }
    }

    /// Zero of the logarithmic profile: `f ∝ ln(r / r_*)` with
    /// `r_* = 2·e^{−γ_E}/κ`.
    pub fn log_zero(&self) -> Option<f64> {
        match *self {
            Self::LogAtOrigin { kappa } => Some((LN_2 - EULER_GAMMA - kappa.ln()).exp()),
            _ => None,
        }
    }
}

impl PartialEq for BoundaryCondition {
    fn eq(&self, other: &Self) -> bool {
        use BoundaryCondition::*;
        match (self, other) {
            (LogAtOrigin { kappa: a }, LogAtOrigin { kappa: b }) => a == b,
            (Dirichlet, Dirichlet) => true,
            _ => match (self.twist_phase(), other.twist_phase()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
        }
    }
}
