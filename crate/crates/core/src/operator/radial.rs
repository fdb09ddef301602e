use num_complex::Complex64;

use super::{BoundaryCondition, Constants, Grid, GridKind, HermitianMatrix, ModelId, OperatorFamily};
use crate::error::{Error, Result};
use crate::models::bessel_k0;

/// Above this `κ·r_min` the logarithmic closure starts to see the curvature
/// of `K₀` and the ground energy degrades.
const KAPPA_R_MIN_WARN: f64 = 0.01;

/// s-wave sector of the 2D delta potential on `r > 0`, parameter `λ = κ`.
///
/// The operator `−½(∂²_r + r⁻¹∂_r)` is discretized in `x = ln r` as
/// `A f = E B f` with `A = −½ D_xx` (finite volume) and `B = diag(r_i² Δx_i)`.
/// The Hermitian matrix is `M = B^{−½} A B^{−½}`, acting on `w_i = √B_ii f_i`.
/// This is the unit-weight (Liouville) form `u = √r f` sampled with
/// quadrature weights `w_i = √(r_i Δx_i)·u_i`.
///
/// The ghost node below `r_0` is eliminated with `f ∝ ln(κr) + γ_E − ln 2`,
/// which is exactly linear in `x`. Only `M[0][0]` depends on `κ`.
/// `r_max` is a Dirichlet node.
#[derive(Debug, Clone)]
pub struct RadialFamily {
    grid: Grid,
    x0: f64,
    /// `½/(x_{i+1} − x_i)`, the last one linking to the Dirichlet node.
    conductance: Vec<f64>,
    mass: Vec<f64>,
    constants: Constants,
}

pub fn build_radial(grid: Grid) -> Result<RadialFamily> {
    RadialFamily::new(grid)
}

impl RadialFamily {
    pub fn new(grid: Grid) -> Result<Self> {
        let GridKind::Radial { r_max } = grid.kind() else {
            return Err(Error::WrongGridKind { expected: "radial" });
        };
        let r = grid.points();
        if let Some(i) = (1..r.len()).find(|&i| !(r[i] > r[i - 1])) {
            return Err(Error::NonMonotoneGrid(i));
        }
        let x: Vec<f64> = r.iter().map(|v| v.ln()).collect();
        let n = x.len();
        let conductance = (0..n)
            .map(|i| {
                let next = if i + 1 < n { x[i + 1] } else { r_max.ln() };
                0.5 / (next - x[i])
            })
            .collect();
        let mass = grid
            .log_cells()
            .iter()
            .zip(r)
            .map(|(c, ri)| c * ri * ri)
            .collect();
        Ok(Self {
            x0: x[0],
            grid,
            conductance,
            mass,
            constants: Constants::default(),
        })
    }

    pub fn with_constants(mut self, constants: Constants) -> Self {
        self.constants = constants;
        self
    }

    /// Diagonal of `B`; `f_i = w_i / √B_ii`.
    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    /// Converts a matrix vector `w` back to samples of `f`.
    pub fn to_profile(&self, w: &[Complex64]) -> Vec<Complex64> {
        w.iter().zip(&self.mass).map(|(v, b)| v / b.sqrt()).collect()
    }

    /// `x_0 − ln r_*`, negative when `r_0` lies inside the log zero `r_*`.
    fn closure_offset(&self, kappa: f64) -> Result<f64> {
        let bc = BoundaryCondition::log_at_origin(kappa)?;
        let offset = self.x0 - bc.log_zero().expect("log condition").ln();
        if offset >= 0.0 {
            return Err(Error::Precondition(format!(
                "r_min = {} must lie below the log zero of kappa = {kappa}",
                self.grid.points()[0]
            )));
        }
        Ok(offset)
    }
}

impl OperatorFamily for RadialFamily {
    fn model(&self) -> ModelId {
        ModelId::RadialLog
    }

    fn grid(&self) -> &Grid {
        &self.grid
    }

    fn constants(&self) -> Constants {
        self.constants
    }

    fn build(&self, kappa: f64) -> Result<HermitianMatrix> {
        self.extended(kappa, kappa)
    }

    fn formal_derivative(&self, _kappa: f64) -> Result<HermitianMatrix> {
        Ok(HermitianMatrix::zeros(self.grid.n_points()))
    }

    fn analytic_derivative(&self, kappa: f64) -> Option<Result<HermitianMatrix>> {
        Some(self.closure_offset(kappa).map(|offset| {
            let mut m = HermitianMatrix::zeros(self.grid.n_points());
            // d/dκ [½/L(κ)] with dL/dκ = 1/κ
            m.set_diag(0, -0.5 / (offset * offset * kappa) / self.mass[0]);
            m
        }))
    }

    fn boundary(&self, kappa: f64) -> Result<BoundaryCondition> {
        BoundaryCondition::log_at_origin(kappa)
    }

    fn extended(&self, _kappa_bulk: f64, kappa_domain: f64) -> Result<HermitianMatrix> {
        let offset = self.closure_offset(kappa_domain)?;
        let r0 = self.grid.points()[0];
        if kappa_domain * r0 > KAPPA_R_MIN_WARN {
            log::warn!(
                "kappa*r_min = {} exceeds {KAPPA_R_MIN_WARN}; the log closure is under-resolved",
                kappa_domain * r0
            );
        }
        let n = self.grid.n_points();
        let c = &self.conductance;
        let b = &self.mass;
        let mut m = HermitianMatrix::zeros(n);
        for i in 0..n {
            let left = if i == 0 { 0.5 / offset } else { c[i - 1] };
            m.set_diag(i, (left + c[i]) / b[i]);
            if i + 1 < n {
                m.set_lower(i + 1, i, Complex64::new(-c[i] / (b[i] * b[i + 1]).sqrt(), 0.0));
            }
        }
        Ok(m)
    }

    fn energy_guess(&self, kappa: f64, mode: i64) -> Option<f64> {
        (mode == 0).then(|| -0.5 * kappa * kappa)
    }

    fn reference_mode(&self, kappa: f64, mode: i64) -> Option<Vec<Complex64>> {
        if mode != 0 {
            return None;
        }
        let mut w: Vec<Complex64> = self
            .grid
            .points()
            .iter()
            .zip(&self.mass)
            .map(|(&r, b)| Complex64::new(b.sqrt() * bessel_k0(kappa * r).unwrap_or(0.0), 0.0))
            .collect();
        let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        w.iter_mut().for_each(|z| *z /= norm);
        Some(w)
    }

    fn check_guard(&self, kappa: f64, mode: i64) -> Result<()> {
        if mode < 0 {
            return Err(Error::ModeUnavailable { mode, model: "radial-log" });
        }
        if !(kappa > 0.0) || !kappa.is_finite() {
            return Err(Error::InvalidKappa(kappa));
        }
        Ok(())
    }
}
