use std::f64::consts::{PI, TAU};

use super::analytic::Wave;
use crate::error::{Error, Result};
use crate::models::{bessel_k0, bessel_k1};
use crate::operator::{Gauge, ModelId};
use crate::Complex64;

/// Endpoints `κr` of the radial bracket. At `1e-8` the small-argument terms
/// `x²K₀²` are below `1e-13`; at `690` the exponential tail is below `1e-299`.
pub const RADIAL_X_LO: f64 = 1e-8;
pub const RADIAL_X_HI: f64 = 690.0;

/// Value, `θ`-derivative, `λ`-derivative, and mixed derivative of `Ψ` at `θ`.
pub type RotorJet = (Complex64, Complex64, Complex64, Complex64);

/// `½{[∂_θΨ* ∂_λΨ]₀^{2π} − [Ψ* ∂_θ∂_λΨ]₀^{2π}}` for `H = −½∂²_θ`.
pub fn rotor_boundary_bracket(jet: impl Fn(f64) -> RotorJet) -> f64 {
    let term = |t: f64| {
        let (psi, dpsi, dl, dldt) = jet(t);
        dpsi.conj() * dl - psi.conj() * dldt
    };
    (0.5 * (term(TAU) - term(0.0))).re
}

/// `−π[r(Ψ* φ′ − Ψ*′ φ)]_{r_lo}^{r_hi}` for the radial s-wave operator, with
/// `jet(r) = (Ψ, Ψ′, φ, φ′)` and `φ = ∂_λΨ`.
pub fn radial_boundary_bracket(
    r_lo: f64,
    r_hi: f64,
    jet: impl Fn(f64) -> Result<(Complex64, Complex64, Complex64, Complex64)>,
) -> Result<f64> {
    let term = |r: f64| -> Result<Complex64> {
        let (psi, dpsi, phi, dphi) = jet(r)?;
        Ok((psi.conj() * dphi - dpsi.conj() * phi) * r)
    };
    Ok((-PI * (term(r_hi)? - term(r_lo)?)).re)
}

/// Jet of `Ψ₀ = (κ/√π)K₀(κr)` and `∂_κΨ₀ = (K₀ − xK₁)/√π`, `x = κr`.
pub(crate) fn radial_jet(kappa: f64, r: f64) -> Result<(Complex64, Complex64, Complex64, Complex64)> {
    let x = kappa * r;
    let (k0, k1) = (bessel_k0(x)?, bessel_k1(x)?);
    let c = 1.0 / PI.sqrt();
    let psi = c * kappa * k0;
    let dpsi = -c * kappa * kappa * k1;
    let phi = c * (k0 - x * k1);
    let dphi = c * kappa * (x * k0 - k1);
    Ok((psi.into(), dpsi.into(), phi.into(), dphi.into()))
}

pub(crate) fn rotor_wave_jet(gauge: Gauge, epsilon: f64, n: i64) -> impl Fn(f64) -> RotorJet {
    let psi = Wave::eigenfunction(gauge, n, epsilon);
    let dl = Wave::eigenfunction_derivative(gauge, n, epsilon);
    move |t| (psi.eval(t), psi.d_theta().eval(t), dl.eval(t), dl.d_theta().eval(t))
}

/// Closed-form boundary evaluation of the anomaly from the analytic
/// eigenfunctions and their parameter derivatives.
pub fn anomaly_boundary_route(model: ModelId, lambda: f64, n: i64) -> Result<f64> {
    match model {
        ModelId::RotorGaugeA => Ok(rotor_boundary_bracket(rotor_wave_jet(Gauge::A, lambda, n))),
        ModelId::RotorGaugeB => Ok(rotor_boundary_bracket(rotor_wave_jet(Gauge::B, lambda, n))),
        ModelId::RadialLog => {
            if !(lambda > 0.0) {
                return Err(Error::InvalidKappa(lambda));
            }
            if n != 0 {
                return Err(Error::ModeUnavailable { mode: n, model: model.as_str() });
            }
            radial_boundary_bracket(RADIAL_X_LO / lambda, RADIAL_X_HI / lambda, |r| {
                radial_jet(lambda, r)
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoint_values() {
        assert!((anomaly_boundary_route(ModelId::RotorGaugeB, 0.25, 1).unwrap() + 0.75).abs() < 1e-12);
        assert_eq!(anomaly_boundary_route(ModelId::RotorGaugeB, 0.0, 0).unwrap(), 0.0);
        assert_eq!(anomaly_boundary_route(ModelId::RotorGaugeA, 0.25, 1).unwrap(), 0.0);
        let r = anomaly_boundary_route(ModelId::RadialLog, 2.0, 0).unwrap();
        assert!((r + 2.0).abs() < 1e-10, "{r}");
        assert!(anomaly_boundary_route(ModelId::RadialLog, 1.0, 1).is_err());
    }
}
