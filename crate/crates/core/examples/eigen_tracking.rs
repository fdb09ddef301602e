// Labelled modes along a flux sweep, and the eigenvector derivative from
// phase-aligned neighbours.

use hfgen::eigen::{eigenvector_family, solve_mode};
use hfgen::{build_rotor_gauge_a, build_rotor_gauge_b, eigh, OperatorFamily};

pub fn run_example() -> hfgen::Result<()> {
    let family = build_rotor_gauge_b(256)?;
    for eps in [0.1, 0.2, 0.3, 0.4] {
        let energies: Vec<String> = (-1..=1)
            .map(|n| solve_mode(&family, eps, n).map(|p| format!("E{n:+} = {:.6}", p.energy)))
            .collect::<hfgen::Result<_>>()?;
        println!("ε = {eps}: {}", energies.join("  "));
    }

    // the twisted gauge's eigenvectors move with ε, the periodic gauge's do not
    for fam in [&build_rotor_gauge_a(256)? as &dyn OperatorFamily, &family] {
        let f = eigenvector_family(fam, 0.3, 1, 1e-5)?;
        let norm: f64 = f.derivative().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        println!("{}: ‖∂ψ1‖ = {norm:.6}", fam.model());
    }

    let dense = eigh(&family.build(0.3)?)?;
    let lowest: Vec<String> = dense.iter().take(4).map(|p| format!("{:.6}", p.energy)).collect();
    println!("dense lowest levels: {}", lowest.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> hfgen::Result<()> {
    run_example()
}
