use std::path::Path;

use rayon::prelude::*;

use super::config::{ExperimentConfig, ModelKind};
use super::output::{format_float, format_opt, write_csv};
use super::run::family_for;
use super::ExperimentError;
use crate::eigen::solve_mode;
use crate::hf::anomaly_matrix_route;
use crate::models::{radial_anomaly_exact, radial_energy_exact, rotor_anomaly_exact, rotor_energy};
use crate::operator::{GridKind, Spacing};

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceLevel {
    pub grid_size: usize,
    /// Grid step: `2π/N` for the rotor, the logarithmic step for radial grids.
    pub h: f64,
    pub eigen_error: f64,
    /// `log₂` of the error ratio to the previous level.
    pub eigen_order: Option<f64>,
    pub delta_error: f64,
    pub delta_order: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub model: ModelKind,
    pub lambda: f64,
    pub mode: i64,
    pub levels: Vec<ConvergenceLevel>,
}

impl ConvergenceTable {
    pub fn eigen_orders(&self) -> Vec<f64> {
        self.levels.iter().filter_map(|l| l.eigen_order).collect()
    }

    pub fn delta_orders(&self) -> Vec<f64> {
        self.levels.iter().filter_map(|l| l.delta_order).collect()
    }

    /// Whether all observed orders fall in the configured brackets. Only the
    /// rotor has predicted orders; radial tables are measurements.
    pub fn within_brackets(&self, cfg: &ExperimentConfig) -> Option<bool> {
        if self.model == ModelKind::Radial {
            return None;
        }
        let inside = |v: &[f64], (lo, hi): (f64, f64)| v.iter().all(|o| (lo..=hi).contains(o));
        Some(
            inside(&self.eigen_orders(), cfg.thresholds.eigen_order)
                && inside(&self.delta_orders(), cfg.thresholds.delta_order),
        )
    }

    pub fn write(&self, path: &Path) -> Result<(), ExperimentError> {
        let header = [
            "model", "lambda", "n", "grid_size", "h", "eigen_error", "eigen_order", "delta_error",
            "delta_order",
        ];
        let rows: Vec<Vec<String>> = self
            .levels
            .iter()
            .map(|l| {
                vec![
                    self.model.model_id().as_str().to_string(),
                    format_float(self.lambda),
                    self.mode.to_string(),
                    l.grid_size.to_string(),
                    format_float(l.h),
                    format_float(l.eigen_error),
                    format_opt(l.eigen_order),
                    format_float(l.delta_error),
                    format_opt(l.delta_order),
                ]
            })
            .collect();
        write_csv(path, "convergence", &header, &rows)
    }
}

/// Eigenvalue and anomaly errors against the closed forms on `levels` grids
/// of size `grid_size·2^l`, for the first parameter value and first mode.
pub fn run_convergence(cfg: &ExperimentConfig) -> Result<ConvergenceTable, ExperimentError> {
    cfg.validate()?;
    if cfg.levels < 3 {
        return Err(ExperimentError::Config(format!(
            "convergence needs at least 3 levels, got {}",
            cfg.levels
        )));
    }
    let lambda = cfg.parameter.values()[0];
    let n = cfg.modes[0];
    let (e_ref, d_ref) = match cfg.model {
        ModelKind::Radial => (radial_energy_exact(lambda), radial_anomaly_exact(lambda)),
        ModelKind::RotorA => (rotor_energy(n, lambda), 0.0),
        ModelKind::RotorB => (rotor_energy(n, lambda), rotor_anomaly_exact(n, lambda)),
    };
    let sizes: Vec<usize> = (0..cfg.levels).map(|l| cfg.grid_size << l).collect();
    let err = move |source| ExperimentError::Numerical { lambda, mode: n, source };
    let raw: Vec<Result<(usize, f64, f64, f64), ExperimentError>> = sizes
        .par_iter()
        .map(|&size| {
            let fam = family_for(cfg, lambda, size).map_err(err)?;
            let pair = solve_mode(fam.as_ref(), lambda, n).map_err(err)?;
            let delta = anomaly_matrix_route(fam.as_ref(), lambda, n, cfg.fd_step).map_err(err)?;
            let h = match (fam.grid().kind(), fam.grid().spacing()) {
                (GridKind::PeriodicAngle, Spacing::Uniform(h)) => h,
                (_, Spacing::Logarithmic(s)) | (_, Spacing::Uniform(s)) => s,
                _ => f64::NAN,
            };
            Ok((size, h, (pair.energy - e_ref).abs(), (delta - d_ref).abs()))
        })
        .collect();
    let raw: Vec<_> = raw.into_iter().collect::<Result<_, _>>()?;
    let order = |prev: f64, cur: f64| (prev / cur).log2();
    let levels = raw
        .iter()
        .enumerate()
        .map(|(i, &(grid_size, h, e, d))| ConvergenceLevel {
            grid_size,
            h,
            eigen_error: e,
            eigen_order: (i > 0).then(|| order(raw[i - 1].2, e)),
            delta_error: d,
            delta_order: (i > 0).then(|| order(raw[i - 1].3, d)),
        })
        .collect();
    Ok(ConvergenceTable { model: cfg.model, lambda, mode: n, levels })
}
