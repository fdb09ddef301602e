//! Closed-form reference data for the rotor and the radial delta-potential
//! model, and the modified Bessel functions they need.

mod bessel;
mod radial;
mod rotor;

pub use bessel::{
    bessel_i0, bessel_i1, bessel_k0, bessel_k0_flagged, bessel_k1, bessel_k1_flagged, Evaluation,
    UNDERFLOW_THRESHOLD,
};
pub use radial::{
    dilation_relation_residual, dilation_residual_with, radial_anomaly_exact, radial_energy_exact,
    radial_ground_state, radial_ground_state_alpha_derivative, RadialReference,
};
pub use rotor::{rotor_anomaly_exact, rotor_eigenfunction, rotor_energy, RotorReference};

/// Euler–Mascheroni constant, 0.57721566490153286061 (20 digits).
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;
