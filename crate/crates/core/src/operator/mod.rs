//! Grids, domain data and Hermitian discretizations of the model Hamiltonians.

mod boundary;
mod family;
mod grid;
mod matrix;
mod radial;
mod rotor;

pub use boundary::BoundaryCondition;
pub use family::{total_matrix_derivative, Constants, DerivativeRule, ModelId, OperatorFamily};
pub use grid::{
    Grid, GridKind, Spacing, DEFAULT_RADIAL_POINTS, DEFAULT_R_MAX_TIMES_KAPPA, DEFAULT_R_MIN, MIN_POINTS,
};
pub use matrix::HermitianMatrix;
pub use radial::{build_radial, RadialFamily};
pub use rotor::{build_rotor_gauge_a, build_rotor_gauge_b, rotor_degeneracy_distance, Gauge, RotorFamily};
