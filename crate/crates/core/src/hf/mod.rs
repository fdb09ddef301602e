//! Every term of the classical and generalized Hellmann–Feynman identities.
//!
//! The anomaly is computed by two independent routes:
//!
//! * matrix route: `⟨Ψ|(dM/dλ − K)|Ψ⟩`, the part of the total matrix
//!   derivative not accounted for by the discretized formal derivative `K`;
//! * boundary route: the closed-form endpoint brackets of
//!   `⟨Ψ|H∂Ψ⟩ − ⟨HΨ|∂Ψ⟩` for the analytic eigenfunctions.

mod analytic;
mod boundary;
mod differential;
mod forms;
mod reports;

pub use analytic::{gauss_legendre, integrated_form_analytic, off_diagonal_form_analytic, Wave};
pub use boundary::{
    anomaly_boundary_route, radial_boundary_bracket, rotor_boundary_bracket, RADIAL_X_HI,
    RADIAL_X_LO,
};
pub use differential::{
    anomaly_matrix_route, check_generalized_hf, energy_derivative, hf_expectation,
    hermiticity_defect, hermiticity_null_test,
};
pub use forms::{integrated_form, off_diagonal_form};
pub use reports::{HfReport, IntegratedReport, OffDiagReport};

use crate::error::{Error, Result};
use crate::Complex64;

/// Imaginary parts of physically real quantities must stay below this
/// fraction of the quantity's scale.
pub const IMAG_TOLERANCE: f64 = 1e-10;

pub(crate) fn real_part(z: Complex64, scale: f64) -> Result<f64> {
    let scale = scale.max(1.0);
    if z.im.abs() > IMAG_TOLERANCE * scale {
        return Err(Error::NotReal { imag: z.im, scale });
    }
    Ok(z.re)
}
