//! Numerical checks of the Hellmann–Feynman theorem for Hamiltonians whose
//! domain of definition moves with the parameter being differentiated.
//!
//! The crate discretizes two model systems, the flux-threaded planar rotor
//! (in a periodic gauge and in a twisted-boundary gauge) and the 2D
//! delta-potential s-wave operator with a logarithmic boundary condition at
//! the origin, and evaluates every term of
//!
//! ```text
//! dE_n/dλ = ⟨Ψ_n| ∂H/∂λ |Ψ_n⟩ + Δ_n(λ),
//! Δ_n(λ)  = ⟨Ψ_n| H ∂_λΨ_n⟩ − ⟨H Ψ_n| ∂_λΨ_n⟩,
//! ```
//!
//! together with the integrated and off-diagonal variants.
//!
//! Module map:
//!
//! * [`operator`]: grids, boundary conditions, banded Hermitian matrices and
//!   the operator families `λ ↦ H(λ)`.
//! * [`eigen`]: dense and targeted Hermitian eigensolvers, mode selection,
//!   phase alignment and eigenvector derivatives.
//! * [`hf`]: the Hellmann–Feynman engine and its reports.
//! * [`models`]: closed-form reference data and modified Bessel functions.
//! * [`experiment`]: configurable parameter sweeps that write CSV reports,
//!   used by the `hfgen` binary.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod eigen;
pub mod error;
pub mod experiment;
pub mod hf;
pub mod models;
pub mod operator;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use eigen::{align_phase, eigenvector_derivative, eigh, select_mode, EigenPair};
pub use hf::{
    anomaly_boundary_route, anomaly_matrix_route, check_generalized_hf, energy_derivative,
    hf_expectation, integrated_form, integrated_form_analytic, off_diagonal_form,
    off_diagonal_form_analytic, HfReport, IntegratedReport, OffDiagReport,
};
pub use operator::{
    build_radial, build_rotor_gauge_a, build_rotor_gauge_b, total_matrix_derivative,
    BoundaryCondition, Constants, DerivativeRule, Gauge, Grid, HermitianMatrix, ModelId,
    OperatorFamily, RadialFamily, RotorFamily,
};
