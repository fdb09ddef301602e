// Grid-doubling study of the twisted-gauge eigenvalue and anomaly.

use hfgen::experiment::{run_convergence, ExperimentConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("hfgen-example-convergence");
    std::fs::create_dir_all(&dir)?;
    let cfg = ExperimentConfig::from_json(&format!(
        r#"{{"model": "rotor-b", "parameter": 0.3, "modes": [1], "grid_size": 64,
            "fd_step": 1e-5, "forms": ["differential"], "levels": 4,
            "output_path": "{}"}}"#,
        dir.join("convergence.csv").display()
    ))?;
    let table = run_convergence(&cfg)?;
    println!("{:>6} {:>12} {:>8} {:>12} {:>8}", "N", "|ΔE|", "order", "|ΔΔ|", "order");
    for l in &table.levels {
        let fmt = |o: Option<f64>| o.map_or("-".to_string(), |v| format!("{v:.3}"));
        println!(
            "{:>6} {:>12.3e} {:>8} {:>12.3e} {:>8}",
            l.grid_size, l.eigen_error, fmt(l.eigen_order), l.delta_error, fmt(l.delta_order)
        );
    }
    println!("within brackets: {:?}", table.within_brackets(&cfg));
    table.write(&cfg.output_path)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
