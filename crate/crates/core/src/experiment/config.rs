use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::ExperimentError;
use crate::eigen::{DEGENERACY_GUARD, MAX_STEP, MIN_STEP};
use crate::operator::{rotor_degeneracy_distance, Constants, Gauge, ModelId, MIN_POINTS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    RotorA,
    RotorB,
    Radial,
}

impl ModelKind {
    pub fn model_id(self) -> ModelId {
        match self {
            Self::RotorA => ModelId::RotorGaugeA,
            Self::RotorB => ModelId::RotorGaugeB,
            Self::Radial => ModelId::RadialLog,
        }
    }

    pub fn gauge(self) -> Option<Gauge> {
        match self {
            Self::RotorA => Some(Gauge::A),
            Self::RotorB => Some(Gauge::B),
            Self::Radial => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Form {
    Differential,
    Integrated,
    Offdiag,
}

impl Form {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Differential => "differential",
            Self::Integrated => "integrated",
            Self::Offdiag => "offdiag",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Parameter {
    Value(f64),
    Sweep { start: f64, stop: f64, count: usize },
}

impl Parameter {
    /// Sample points, inclusive of both sweep ends.
    pub fn values(&self) -> Vec<f64> {
        match *self {
            Self::Value(v) => vec![v],
            Self::Sweep { start, count: 1, .. } => vec![start],
            Self::Sweep { start, stop, count } => (0..count)
                .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
                .collect(),
        }
    }
}

/// PASS thresholds. Radial entries are relative to `κ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Thresholds {
    pub rotor_residual: f64,
    pub rotor_delta: f64,
    pub radial_residual: f64,
    pub radial_delta: f64,
    pub integrated_residual: f64,
    pub offdiag_residual: f64,
    pub eigen_order: (f64, f64),
    pub delta_order: (f64, f64),
}

impl Default for Thresholds {
    fn default() -> Self {
        Self {
            rotor_residual: 1e-4,
            rotor_delta: 1e-4,
            radial_residual: 1e-2,
            radial_delta: 1e-2,
            integrated_residual: 1e-8,
            offdiag_residual: 1e-6,
            eigen_order: (1.8, 2.2),
            delta_order: (1.5, 2.5),
        }
    }
}

fn one() -> f64 {
    1.0
}

fn default_offset() -> f64 {
    1e-4
}

fn default_levels() -> usize {
    4
}

fn default_r_min() -> f64 {
    crate::operator::DEFAULT_R_MIN
}

fn default_r_max_times_kappa() -> f64 {
    crate::operator::DEFAULT_R_MAX_TIMES_KAPPA
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub model: ModelKind,
    /// `ε` for the rotor, `κ` for the radial model.
    pub parameter: Parameter,
    pub modes: Vec<i64>,
    pub grid_size: usize,
    pub fd_step: f64,
    pub forms: Vec<Form>,
    pub output_path: PathBuf,
    /// Use the continuum (quadrature) route for rotor integrated/off-diagonal forms.
    #[serde(default)]
    pub analytic: bool,
    /// `λ2 = λ − integrated_offset` in the integrated form.
    #[serde(default = "default_offset")]
    pub integrated_offset: f64,
    /// Off-diagonal `(n, m)` pairs; all `n < m` from `modes` when absent.
    #[serde(default)]
    pub pairs: Option<Vec<(i64, i64)>>,
    #[serde(default = "one")]
    pub hbar: f64,
    #[serde(default = "one")]
    pub mass: f64,
    #[serde(default = "default_r_min")]
    pub r_min: f64,
    #[serde(default = "default_r_max_times_kappa")]
    pub r_max_times_kappa: f64,
    /// Grid doublings for the convergence study.
    #[serde(default = "default_levels")]
    pub levels: usize,
    #[serde(default)]
    pub thresholds: Thresholds,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, ExperimentError> {
        serde_json::from_str(text).map_err(|e| ExperimentError::Config(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self, ExperimentError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ExperimentError::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn constants(&self) -> Constants {
        Constants { hbar: self.hbar, mass: self.mass }
    }

    pub fn offdiag_pairs(&self) -> Vec<(i64, i64)> {
        match &self.pairs {
            Some(p) => p.clone(),
            None => {
                let mut out = Vec::new();
                for (i, &n) in self.modes.iter().enumerate() {
                    for &m in &self.modes[i + 1..] {
                        out.push((n, m));
                    }
                }
                out
            }
        }
    }

    /// Output file of one form: `output_path` itself when a single form is
    /// requested, `<stem>_<form>.<ext>` otherwise.
    pub fn output_for(&self, form: Form) -> PathBuf {
        if self.forms.len() <= 1 {
            return self.output_path.clone();
        }
        let stem = self
            .output_path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "hfgen".into());
        let ext = self
            .output_path
            .extension()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "csv".into());
        self.output_path.with_file_name(format!("{stem}_{}.{ext}", form.as_str()))
    }

    pub fn validate(&self) -> Result<(), ExperimentError> {
        let bad = |m: String| Err(ExperimentError::Config(m));
        if self.grid_size < MIN_POINTS {
            return bad(format!("grid_size {} below {MIN_POINTS}", self.grid_size));
        }
        if !(1e-8..=1e-1).contains(&self.fd_step) {
            return bad(format!("fd_step {} outside [1e-8, 1e-1]", self.fd_step));
        }
        if self.forms.contains(&Form::Offdiag) && !(MIN_STEP..=MAX_STEP).contains(&self.fd_step) {
            return bad(format!("off-diagonal form needs fd_step in [{MIN_STEP}, {MAX_STEP}]"));
        }
        if self.modes.is_empty() {
            return bad("no modes requested".into());
        }
        if self.forms.is_empty() {
            return bad("no forms requested".into());
        }
        if !(self.hbar > 0.0 && self.mass > 0.0) {
            return bad("hbar and mass must be positive".into());
        }
        if let Parameter::Sweep { start, stop, count } = self.parameter {
            if count == 0 || !start.is_finite() || !stop.is_finite() {
                return bad("sweep needs finite bounds and count ≥ 1".into());
            }
        }
        let values = self.parameter.values();
        if values.iter().any(|v| !v.is_finite()) {
            return bad("parameter must be finite".into());
        }
        if self.forms.contains(&Form::Integrated) && !(self.integrated_offset != 0.0 && self.integrated_offset.is_finite()) {
            return bad("integrated_offset must be finite and nonzero".into());
        }
        if self.forms.contains(&Form::Offdiag) {
            let pairs = self.offdiag_pairs();
            if pairs.is_empty() {
                return bad("off-diagonal form needs at least two modes".into());
            }
            if let Some((n, _)) = pairs.iter().find(|(n, m)| n == m) {
                return bad(format!("off-diagonal pair ({n}, {n}) is diagonal"));
            }
        }
        match self.model {
            ModelKind::Radial => {
                if let Some(k) = values.iter().find(|&&k| !(k > 0.0)) {
                    return bad(format!("kappa {k} must be positive"));
                }
                if self.modes.iter().any(|&n| n != 0) {
                    return bad("the radial model has a single bound state, n = 0".into());
                }
                if self.forms.contains(&Form::Offdiag) {
                    return bad("the radial model has no second bound state for the off-diagonal form".into());
                }
                if !(self.r_min > 0.0 && self.r_max_times_kappa > 0.0) {
                    return bad("radial range must be positive".into());
                }
            }
            ModelKind::RotorA | ModelKind::RotorB => {
                let lambda2 = |l: f64| l - self.integrated_offset;
                let mut modes = self.modes.clone();
                if self.forms.contains(&Form::Offdiag) {
                    modes.extend(self.offdiag_pairs().iter().flat_map(|&(n, m)| [n, m]));
                }
                for &l in &values {
                    for &n in &modes {
                        let mut points = vec![l];
                        if self.forms.contains(&Form::Integrated) {
                            points.push(lambda2(l));
                        }
                        for p in points {
                            if rotor_degeneracy_distance(p, n) < DEGENERACY_GUARD {
                                return bad(format!(
                                    "epsilon = {p} is within {DEGENERACY_GUARD} of a level crossing of mode {n}"
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
