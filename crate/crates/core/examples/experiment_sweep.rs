// A configured sweep over flux writing one CSV per form.

use hfgen::experiment::{run, ExperimentConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("hfgen-example-sweep");
    std::fs::create_dir_all(&dir)?;
    let cfg = ExperimentConfig::from_json(&format!(
        r#"{{"model": "rotor-b",
            "parameter": {{"start": 0.1, "stop": 0.4, "count": 4}},
            "modes": [0, 1], "grid_size": 512, "fd_step": 1e-5,
            "forms": ["differential", "integrated", "offdiag"], "analytic": true,
            "output_path": "{}"}}"#,
        dir.join("sweep.csv").display()
    ))?;
    let summary = run(&cfg)?;
    for r in &summary.differential {
        println!(
            "ε = {:.2} n = {} dE = {:+.6} Δ = {:+.6} residual {:.1e}",
            r.lambda, r.mode, r.de_dlambda, r.delta_matrix_route, r.residual_generalized
        );
    }
    for f in &summary.files {
        println!("wrote {}", f.display());
    }
    println!("{}", summary.summary_line());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
