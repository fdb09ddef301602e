// The flux-threaded rotor in both gauges: the periodic gauge satisfies the
// ordinary Hellmann–Feynman theorem, the twisted gauge needs the anomaly.

use hfgen::{build_rotor_gauge_a, build_rotor_gauge_b, check_generalized_hf, OperatorFamily};

pub fn run_example() -> hfgen::Result<()> {
    let epsilon = 0.3;
    let gauge_a = build_rotor_gauge_a(2048)?;
    let gauge_b = build_rotor_gauge_b(2048)?;
    println!("{:>6} {:>3} {:>13} {:>13} {:>13} {:>11}", "gauge", "n", "dE/dε", "<∂H>", "Δ", "residual");
    for (label, family) in [("A", &gauge_a as &dyn OperatorFamily), ("B", &gauge_b)] {
        for n in -2..=2 {
            let r = check_generalized_hf(family, epsilon, n, 1e-5)?;
            println!(
                "{label:>6} {n:>3} {:>13.8} {:>13.8} {:>13.8} {:>11.2e}",
                r.de_dlambda, r.expectation_formal, r.delta_matrix_route, r.residual_generalized
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hfgen::Result<()> {
    run_example()
}
