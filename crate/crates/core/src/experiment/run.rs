use std::path::PathBuf;

use rayon::prelude::*;

use super::config::{ExperimentConfig, Form, ModelKind};
use super::output::{format_float, format_opt, write_csv};
use super::ExperimentError;
use crate::hf::{
    check_generalized_hf, integrated_form, integrated_form_analytic, off_diagonal_form,
    off_diagonal_form_analytic, HfReport, IntegratedReport, OffDiagReport,
};
use crate::models::{radial_anomaly_exact, rotor_anomaly_exact};
use crate::operator::{Grid, OperatorFamily, RadialFamily, RotorFamily};

/// Outcome of one form against its threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub form: Form,
    pub rows: usize,
    /// Largest threshold-normalized deviation; `≤ 1` passes.
    pub worst: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Default)]
pub struct RunSummary {
    pub files: Vec<PathBuf>,
    pub checks: Vec<Check>,
    /// Reports in `ħ = m = 1` units, rows ordered by `(λ, n)`.
    pub differential: Vec<HfReport>,
    pub integrated: Vec<IntegratedReport>,
    pub offdiag: Vec<OffDiagReport>,
}

impl RunSummary {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// `PASS differential[5 rows, worst 0.012] integrated[...]`.
    pub fn summary_line(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let parts: Vec<String> = self
            .checks
            .iter()
            .map(|c| format!("{}[{} rows, worst/threshold {:.3e}]", c.form.as_str(), c.rows, c.worst))
            .collect();
        format!("{verdict} {}", parts.join(" "))
    }
}

pub(crate) fn family_for(
    cfg: &ExperimentConfig,
    lambda: f64,
    grid_size: usize,
) -> crate::Result<Box<dyn OperatorFamily>> {
    Ok(match cfg.model.gauge() {
        Some(g) => Box::new(RotorFamily::new(g, grid_size)?.with_constants(cfg.constants())),
        None => {
            let grid = Grid::radial_log(cfg.r_min, cfg.r_max_times_kappa / lambda, grid_size)?;
            Box::new(RadialFamily::new(grid)?.with_constants(cfg.constants()))
        }
    })
}

fn numerical(lambda: f64, mode: i64) -> impl Fn(crate::Error) -> ExperimentError {
    move |source| ExperimentError::Numerical { lambda, mode, source }
}

fn reference_delta(model: ModelKind, lambda: f64, n: i64) -> f64 {
    match model {
        ModelKind::RotorA => 0.0,
        ModelKind::RotorB => rotor_anomaly_exact(n, lambda),
        ModelKind::Radial => radial_anomaly_exact(lambda),
    }
}

/// Run every requested form, write one CSV per form, and check the results
/// against the configured thresholds.
pub fn run(cfg: &ExperimentConfig) -> Result<RunSummary, ExperimentError> {
    cfg.validate()?;
    if cfg.analytic && cfg.model == ModelKind::Radial && cfg.forms.iter().any(|f| *f != Form::Differential) {
        return Err(ExperimentError::Config("the analytic route exists only for the rotor".into()));
    }
    let values = cfg.parameter.values();
    let jobs: Vec<(f64, i64)> = values
        .iter()
        .flat_map(|&l| cfg.modes.iter().map(move |&n| (l, n)))
        .collect();
    let scale = cfg.constants().energy_scale();
    let mut summary = RunSummary::default();
    let mut forms = cfg.forms.clone();
    forms.sort();
    forms.dedup();
    for form in forms {
        let path = cfg.output_for(form);
        match form {
            Form::Differential => {
                let mut rows = collect(jobs.par_iter().map(|&(l, n)| {
                    let fam = family_for(cfg, l, cfg.grid_size).map_err(numerical(l, n))?;
                    check_generalized_hf(fam.as_ref(), l, n, cfg.fd_step).map_err(numerical(l, n))
                }))?;
                rows.sort_by(|a, b| a.lambda.total_cmp(&b.lambda).then(a.mode.cmp(&b.mode)));
                write_differential(&path, &rows, scale)?;
                let worst = rows
                    .iter()
                    .map(|r| {
                        let (res, del) = match cfg.model {
                            ModelKind::Radial => (
                                cfg.thresholds.radial_residual * r.lambda,
                                cfg.thresholds.radial_delta * r.lambda,
                            ),
                            _ => (cfg.thresholds.rotor_residual, cfg.thresholds.rotor_delta),
                        };
                        let d = (r.delta_matrix_route - reference_delta(cfg.model, r.lambda, r.mode)).abs();
                        (r.residual_generalized / res).max(d / del)
                    })
                    .fold(0.0, f64::max);
                summary.checks.push(check(form, rows.len(), worst));
                summary.differential = rows;
            }
            Form::Integrated => {
                let mut rows = collect(jobs.par_iter().map(|&(l, n)| {
                    let l2 = l - cfg.integrated_offset;
                    match (cfg.analytic, cfg.model.gauge()) {
                        (true, Some(g)) => integrated_form_analytic(g, l, l2, n),
                        _ => family_for(cfg, l, cfg.grid_size)
                            .and_then(|fam| integrated_form(fam.as_ref(), l, l2, n)),
                    }
                    .map_err(numerical(l, n))
                }))?;
                rows.sort_by(|a, b| a.lambda1.total_cmp(&b.lambda1).then(a.mode.cmp(&b.mode)));
                write_integrated(&path, cfg, &rows, scale)?;
                let worst = rows
                    .iter()
                    .map(|r| r.residual / cfg.thresholds.integrated_residual)
                    .fold(0.0, f64::max);
                summary.checks.push(check(form, rows.len(), worst));
                summary.integrated = rows;
            }
            Form::Offdiag => {
                let pairs = cfg.offdiag_pairs();
                let pair_jobs: Vec<(f64, i64, i64)> = values
                    .iter()
                    .flat_map(|&l| pairs.iter().map(move |&(n, m)| (l, n, m)))
                    .collect();
                let mut rows = collect(pair_jobs.par_iter().map(|&(l, n, m)| {
                    match (cfg.analytic, cfg.model.gauge()) {
                        (true, Some(g)) => off_diagonal_form_analytic(g, l, n, m),
                        _ => family_for(cfg, l, cfg.grid_size)
                            .and_then(|fam| off_diagonal_form(fam.as_ref(), l, n, m, cfg.fd_step)),
                    }
                    .map_err(numerical(l, m))
                }))?;
                rows.sort_by(|a, b| {
                    a.lambda.total_cmp(&b.lambda).then(a.n.cmp(&b.n)).then(a.m.cmp(&b.m))
                });
                write_offdiag(&path, cfg, &rows, scale)?;
                let worst = rows
                    .iter()
                    .map(|r| r.residual / cfg.thresholds.offdiag_residual)
                    .fold(0.0, f64::max);
                summary.checks.push(check(form, rows.len(), worst));
                summary.offdiag = rows;
            }
        }
        summary.files.push(path);
    }
    Ok(summary)
}

fn check(form: Form, rows: usize, worst: f64) -> Check {
    Check { form, rows, worst, passed: worst <= 1.0 }
}

/// First error in job order, so failures are reported deterministically.
fn collect<T: Send>(
    it: impl IndexedParallelIterator<Item = Result<T, ExperimentError>>,
) -> Result<Vec<T>, ExperimentError> {
    let results: Vec<Result<T, ExperimentError>> = it.collect();
    results.into_iter().collect()
}

fn route(cfg: &ExperimentConfig) -> &'static str {
    if cfg.analytic && cfg.model.gauge().is_some() {
        "analytic"
    } else {
        "discrete"
    }
}

fn model_name(cfg: &ExperimentConfig) -> &'static str {
    cfg.model.model_id().as_str()
}

fn write_differential(path: &std::path::Path, rows: &[HfReport], s: f64) -> Result<(), ExperimentError> {
    let header = [
        "model",
        "lambda",
        "n",
        "E",
        "dE_dlambda",
        "expectation_formal",
        "delta_matrix",
        "delta_boundary",
        "residual_naive",
        "residual_generalized",
        "grid_size",
        "fd_step",
    ];
    let records: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.model.as_str().to_string(),
                format_float(r.lambda),
                r.mode.to_string(),
                format_float(s * r.energy),
                format_float(s * r.de_dlambda),
                format_float(s * r.expectation_formal),
                format_float(s * r.delta_matrix_route),
                format_opt(r.delta_boundary_route.map(|v| s * v)),
                format_float(s * r.residual_naive),
                format_float(s * r.residual_generalized),
                r.grid_size.to_string(),
                format_float(r.fd_step),
            ]
        })
        .collect();
    write_csv(path, "differential", &header, &records)
}

fn write_integrated(
    path: &std::path::Path,
    cfg: &ExperimentConfig,
    rows: &[IntegratedReport],
    s: f64,
) -> Result<(), ExperimentError> {
    let header = [
        "model", "lambda1", "lambda2", "n", "route", "overlap_re", "overlap_im", "lhs_re", "lhs_im",
        "matrix_term_re", "matrix_term_im", "delta_term_re", "delta_term_im", "residual", "grid_size",
    ];
    let records: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                model_name(cfg).to_string(),
                format_float(r.lambda1),
                format_float(r.lambda2),
                r.mode.to_string(),
                route(cfg).to_string(),
                format_float(r.overlap.re),
                format_float(r.overlap.im),
                format_float(s * r.lhs.re),
                format_float(s * r.lhs.im),
                format_float(s * r.matrix_term.re),
                format_float(s * r.matrix_term.im),
                format_float(s * r.delta_term.re),
                format_float(s * r.delta_term.im),
                format_float(s * r.residual),
                cfg.grid_size.to_string(),
            ]
        })
        .collect();
    write_csv(path, "integrated", &header, &records)
}

fn write_offdiag(
    path: &std::path::Path,
    cfg: &ExperimentConfig,
    rows: &[OffDiagReport],
    s: f64,
) -> Result<(), ExperimentError> {
    let header = [
        "model", "lambda", "n", "m", "route", "lhs_re", "lhs_im", "expectation_formal_re",
        "expectation_formal_im", "delta_nm_re", "delta_nm_im", "residual", "grid_size", "fd_step",
    ];
    let records: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                model_name(cfg).to_string(),
                format_float(r.lambda),
                r.n.to_string(),
                r.m.to_string(),
                route(cfg).to_string(),
                format_float(s * r.lhs.re),
                format_float(s * r.lhs.im),
                format_float(s * r.expectation_formal.re),
                format_float(s * r.expectation_formal.im),
                format_float(s * r.delta_nm.re),
                format_float(s * r.delta_nm.im),
                format_float(s * r.residual),
                cfg.grid_size.to_string(),
                format_float(cfg.fd_step),
            ]
        })
        .collect();
    write_csv(path, "offdiag", &header, &records)
}
