//! Configurable experiments: parameter sweeps over the Hellmann–Feynman checks
//! and grid-refinement studies, written as CSV.

mod config;
mod convergence;
mod output;
mod run;

pub use config::{ExperimentConfig, Form, ModelKind, Parameter, Thresholds};
pub use convergence::{run_convergence, ConvergenceLevel, ConvergenceTable};
pub use output::{format_float, SCHEMA_VERSION};
pub use run::{run, Check, RunSummary};

use std::path::PathBuf;

/// Failure of an experiment, split by the exit code it maps to.
#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("numerical failure at lambda = {lambda}, n = {mode}: {source}")]
    Numerical {
        lambda: f64,
        mode: i64,
        #[source]
        source: crate::Error,
    },
    #[error("cannot write {path}: {message}")]
    Output { path: PathBuf, message: String },
}

impl ExperimentError {
    /// `2` for configuration and output problems, `3` for numerical ones.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Config(_) | Self::Output { .. } => 2,
            Self::Numerical { .. } => 3,
        }
    }
}
