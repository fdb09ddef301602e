use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use hfgen::experiment::{run, run_convergence, ExperimentConfig, ExperimentError};

#[derive(Parser)]
#[command(name = "hfgen", version, about = "Generalized Hellmann–Feynman checks with boundary anomalies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Flux-threaded rotor in gauge a (periodic) or b (twisted boundary).
    Rotor {
        #[arg(long, value_enum)]
        gauge: GaugeArg,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "sweep")]
        epsilon: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// 2D delta potential as a radial operator with a logarithmic boundary condition.
    Radial {
        #[arg(long, conflicts_with = "sweep")]
        kappa: Option<f64>,
        #[arg(long)]
        r_min: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Off-diagonal form for pairs of modes.
    Offdiag {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<f64>,
        /// `n:m` pairs, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        pairs: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Integrated form between two parameter values.
    Integrated {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda1: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        lambda2: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Grid-doubling study of eigenvalue and anomaly errors.
    Convergence {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<f64>,
        #[arg(long)]
        levels: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// `start:stop:count`.
    #[arg(long, allow_hyphen_values = true)]
    sweep: Option<String>,
    /// Range `a..b` (inclusive) or comma list.
    #[arg(long, allow_hyphen_values = true)]
    modes: Option<String>,
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long)]
    fd_step: Option<f64>,
    /// Comma list of differential, integrated, offdiag.
    #[arg(long)]
    forms: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Use the continuum quadrature route (rotor integrated/off-diagonal).
    #[arg(long)]
    analytic: bool,
    #[arg(long)]
    hbar: Option<f64>,
    #[arg(long)]
    mass: Option<f64>,
    /// JSON file whose fields override the flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GaugeArg {
    A,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    RotorA,
    RotorB,
    Radial,
}

impl ModelArg {
    fn name(self) -> &'static str {
        match self {
            Self::RotorA => "rotor-a",
            Self::RotorB => "rotor-b",
            Self::Radial => "radial",
        }
    }

    fn defaults(self) -> (f64, usize) {
        match self {
            Self::Radial => (1.0, 4000),
            _ => (0.25, 2048),
        }
    }
}

fn config_error(m: impl Into<String>) -> ExperimentError {
    ExperimentError::Config(m.into())
}

fn parse_modes(s: &str) -> Result<Vec<i64>, ExperimentError> {
    let bad = || config_error(format!("cannot parse modes {s:?}"));
    if let Some((a, b)) = s.split_once("..") {
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
        return Ok((a..=b).collect());
    }
    s.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect()
}

fn parse_pairs(s: &str) -> Result<Vec<(i64, i64)>, ExperimentError> {
    s.split(',')
        .map(|p| {
            let (a, b) = p.split_once(':').ok_or_else(|| config_error(format!("pair {p:?} is not n:m")))?;
            let n = a.trim().parse().map_err(|_| config_error(format!("bad pair {p:?}")))?;
            let m = b.trim().parse().map_err(|_| config_error(format!("bad pair {p:?}")))?;
            Ok((n, m))
        })
        .collect()
}

fn parse_sweep(s: &str) -> Result<Value, ExperimentError> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || config_error(format!("sweep {s:?} is not start:stop:count"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let start: f64 = parts[0].parse().map_err(|_| bad())?;
    let stop: f64 = parts[1].parse().map_err(|_| bad())?;
    let count: usize = parts[2].parse().map_err(|_| bad())?;
    Ok(json!({"start": start, "stop": stop, "count": count}))
}

/// Recursive object merge, `over` wins.
fn merge(base: &mut Value, over: Value) {
    match (base, over) {
        (Value::Object(b), Value::Object(o)) => {
            for (k, v) in o {
                match b.get_mut(&k) {
                    Some(slot) if slot.is_object() && v.is_object() => merge(slot, v),
                    _ => {
                        b.insert(k, v);
                    }
                }
            }
        }
        (b, o) => *b = o,
    }
}

fn base_config(c: &Common, model: &str, lambda: f64, grid: usize, out: &str) -> Result<Map<String, Value>, ExperimentError> {
    let parameter = match &c.sweep {
        Some(s) => parse_sweep(s)?,
        None => json!(lambda),
    };
    let modes = match &c.modes {
        Some(s) => parse_modes(s)?,
        None => vec![0],
    };
    let forms: Vec<String> = match &c.forms {
        Some(f) => f.split(',').map(|s| s.trim().to_string()).collect(),
        None => vec!["differential".into()],
    };
    let mut m = Map::new();
    m.insert("model".into(), json!(model));
    m.insert("parameter".into(), parameter);
    m.insert("modes".into(), json!(modes));
    m.insert("grid_size".into(), json!(c.grid.unwrap_or(grid)));
    m.insert("fd_step".into(), json!(c.fd_step.unwrap_or(1e-5)));
    m.insert("forms".into(), json!(forms));
    m.insert("output_path".into(), json!(c.out.clone().unwrap_or_else(|| PathBuf::from(out))));
    m.insert("analytic".into(), json!(c.analytic));
    if let Some(h) = c.hbar {
        m.insert("hbar".into(), json!(h));
    }
    if let Some(mass) = c.mass {
        m.insert("mass".into(), json!(mass));
    }
    Ok(m)
}

fn finish(mut value: Value, common: &Common) -> Result<ExperimentConfig, ExperimentError> {
    if let Some(path) = &common.config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| config_error(format!("{}: {e}", path.display())))?;
        let over: Value = serde_json::from_str(&text).map_err(|e| config_error(e.to_string()))?;
        merge(&mut value, over);
    }
    serde_json::from_value(value).map_err(|e| config_error(e.to_string()))
}

fn execute(cli: Cli) -> Result<(), ExperimentError> {
    match cli.command {
        Command::Rotor { gauge, epsilon, common } => {
            let model = match gauge {
                GaugeArg::A => "rotor-a",
                GaugeArg::B => "rotor-b",
            };
            let m = base_config(&common, model, epsilon.unwrap_or(0.25), 2048, "rotor.csv")?;
            report(finish(Value::Object(m), &common)?)
        }
        Command::Radial { kappa, r_min, common } => {
            let mut m = base_config(&common, "radial", kappa.unwrap_or(1.0), 4000, "radial.csv")?;
            if let Some(r) = r_min {
                m.insert("r_min".into(), json!(r));
            }
            report(finish(Value::Object(m), &common)?)
        }
        Command::Offdiag { model, lambda, pairs, common } => {
            let (l, grid) = model.defaults();
            let mut m = base_config(&common, model.name(), lambda.unwrap_or(l), grid, "offdiag.csv")?;
            m.insert("forms".into(), json!(["offdiag"]));
            let pairs = match pairs {
                Some(p) => parse_pairs(&p)?,
                None => vec![(0, 1)],
            };
            let mut modes: Vec<i64> = pairs.iter().flat_map(|&(n, m)| [n, m]).collect();
            modes.sort();
            modes.dedup();
            m.insert("modes".into(), json!(modes));
            m.insert("pairs".into(), json!(pairs));
            report(finish(Value::Object(m), &common)?)
        }
        Command::Integrated { model, lambda1, lambda2, common } => {
            let (l, grid) = model.defaults();
            let l1 = lambda1.unwrap_or(l);
            let l2 = lambda2.unwrap_or(l1 - 1e-4);
            let mut m = base_config(&common, model.name(), l1, grid, "integrated.csv")?;
            m.insert("forms".into(), json!(["integrated"]));
            m.insert("integrated_offset".into(), json!(l1 - l2));
            report(finish(Value::Object(m), &common)?)
        }
        Command::Convergence { model, lambda, levels, common } => {
            let (l, _) = model.defaults();
            let base = if model.name() == "radial" { 500 } else { 256 };
            let mut m = base_config(&common, model.name(), lambda.unwrap_or(l), base, "convergence.csv")?;
            m.insert("levels".into(), json!(levels.unwrap_or(4)));
            let cfg = finish(Value::Object(m), &common)?;
            let table = run_convergence(&cfg)?;
            table.write(&cfg.output_path)?;
            let verdict = match table.within_brackets(&cfg) {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => "MEASURED",
            };
            println!(
                "{verdict} convergence eigen orders {:?} delta orders {:?}",
                table.eigen_orders(),
                table.delta_orders()
            );
            Ok(())
        }
    }
}

fn report(cfg: ExperimentConfig) -> Result<(), ExperimentError> {
    let summary = run(&cfg)?;
    println!("{}", summary.summary_line());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hfgen: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
