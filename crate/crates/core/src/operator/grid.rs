use std::f64::consts::PI;

use crate::error::{Error, Result};

pub const MIN_POINTS: usize = 8;

/// Default radial grid parameters, in units where the bound state has `κ = 1`.
pub const DEFAULT_R_MIN: f64 = 1e-6;
pub const DEFAULT_R_MAX_TIMES_KAPPA: f64 = 40.0;
pub const DEFAULT_RADIAL_POINTS: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridKind {
    /// `θ_j = j·h` on `[0, 2π)`.
    PeriodicAngle,
    /// Interior nodes `r_0 < … < r_{N−1}`; `r_max` is the (excluded) Dirichlet node.
    Radial { r_max: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Spacing {
    Uniform(f64),
    Logarithmic(f64),
    Irregular,
}

/// A discretized coordinate domain.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    kind: GridKind,
    points: Vec<f64>,
    spacing: Spacing,
}

impl Grid {
    pub fn periodic(n_points: usize) -> Result<Self> {
        if n_points < MIN_POINTS {
            return Err(Error::GridTooSmall(n_points));
        }
        let h = 2.0 * PI / n_points as f64;
        Ok(Self {
            kind: GridKind::PeriodicAngle,
            points: (0..n_points).map(|j| j as f64 * h).collect(),
            spacing: Spacing::Uniform(h),
        })
    }

    /// Logarithmically spaced nodes `r_i = r_min·e^{i·s}` with `r_N = r_max`.
    pub fn radial_log(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        check_range(r_min, r_max, n_points)?;
        let step = (r_max / r_min).ln() / n_points as f64;
        let points = (0..n_points).map(|i| r_min * (i as f64 * step).exp()).collect();
        Ok(Self {
            kind: GridKind::Radial { r_max },
            points,
            spacing: Spacing::Logarithmic(step),
        })
    }

    /// Uniformly spaced nodes `r_i = r_min + i·h` with `r_N = r_max`.
    pub fn radial_uniform(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        check_range(r_min, r_max, n_points)?;
        let h = (r_max - r_min) / n_points as f64;
        Ok(Self {
            kind: GridKind::Radial { r_max },
            points: (0..n_points).map(|i| r_min + i as f64 * h).collect(),
            spacing: Spacing::Uniform(h),
        })
    }

    /// Arbitrary radial nodes; `r_max` must exceed the last node.
    pub fn radial_from_points(points: Vec<f64>, r_max: f64) -> Result<Self> {
        if points.len() < MIN_POINTS {
            return Err(Error::GridTooSmall(points.len()));
        }
        if !(points[0] > 0.0) || !r_max.is_finite() {
            return Err(Error::InvalidRadialRange { r_min: points[0], r_max });
        }
        for i in 1..points.len() {
            if !(points[i] > points[i - 1]) {
                return Err(Error::NonMonotoneGrid(i));
            }
        }
        if !(r_max > points[points.len() - 1]) {
            return Err(Error::NonMonotoneGrid(points.len()));
        }
        Ok(Self {
            kind: GridKind::Radial { r_max },
            points,
            spacing: Spacing::Irregular,
        })
    }

    /// Log-spaced grid on `[1e-6, 40/κ]` with 4000 nodes.
    pub fn radial_default(kappa: f64) -> Result<Self> {
        if !(kappa > 0.0) || !kappa.is_finite() {
            return Err(Error::InvalidKappa(kappa));
        }
        Self::radial_log(
            DEFAULT_R_MIN,
            DEFAULT_R_MAX_TIMES_KAPPA / kappa,
            DEFAULT_RADIAL_POINTS,
        )
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn spacing(&self) -> Spacing {
        self.spacing
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn is_periodic(&self) -> bool {
        matches!(self.kind, GridKind::PeriodicAngle)
    }

    /// Uniform step of a periodic grid.
    pub fn angular_step(&self) -> Option<f64> {
        match (self.kind, self.spacing) {
            (GridKind::PeriodicAngle, Spacing::Uniform(h)) => Some(h),
            _ => None,
        }
    }

    pub fn r_max(&self) -> Option<f64> {
        match self.kind {
            GridKind::Radial { r_max } => Some(r_max),
            GridKind::PeriodicAngle => None,
        }
    }

    /// Quadrature weights of the natural measure: `h` on the circle, and
    /// `r_i·Δx_i` on a radial grid, where `Δx_i` is the dual cell in `x = ln r`.
    pub fn weights(&self) -> Vec<f64> {
        match self.kind {
            GridKind::PeriodicAngle => vec![2.0 * PI / self.n_points() as f64; self.n_points()],
            GridKind::Radial { .. } => self
                .log_cells()
                .iter()
                .zip(&self.points)
                .map(|(c, r)| c * r)
                .collect(),
        }
    }

    /// Dual-cell widths in `x = ln r`. The ghost node below `r_0` mirrors `r_1`.
    pub(crate) fn log_cells(&self) -> Vec<f64> {
        let GridKind::Radial { r_max } = self.kind else {
            return Vec::new();
        };
        let x: Vec<f64> = self.points.iter().map(|r| r.ln()).collect();
        let n = x.len();
        (0..n)
            .map(|i| {
                let right = if i + 1 < n { x[i + 1] } else { r_max.ln() };
                let left = if i > 0 { x[i - 1] } else { 2.0 * x[0] - x[1] };
                0.5 * (right - left)
            })
            .collect()
    }
}

fn check_range(r_min: f64, r_max: f64, n_points: usize) -> Result<()> {
    if n_points < MIN_POINTS {
        return Err(Error::GridTooSmall(n_points));
    }
    if !(r_min > 0.0 && r_max > r_min && r_max.is_finite()) {
        return Err(Error::InvalidRadialRange { r_min, r_max });
    }
    Ok(())
}
