// Integrated form between two flux values, by quadrature of the continuum
// eigenfunctions and on the discrete twisted-gauge matrix.

use std::f64::consts::TAU;

use hfgen::models::rotor_energy;
use hfgen::{build_rotor_gauge_b, integrated_form, integrated_form_analytic, Complex64, Gauge};

pub fn run_example() -> hfgen::Result<()> {
    let (eps1, eps2) = (0.25, 0.1);
    let analytic = integrated_form_analytic(Gauge::B, eps1, eps2, 0)?;
    let d = eps2 - eps1;
    let i = Complex64::new(0.0, 1.0);
    let overlap = ((i * TAU * d).exp() - 1.0) / (i * TAU * d);
    let closed = overlap * (rotor_energy(0, eps1) - rotor_energy(0, eps2));
    println!("continuum: lhs {:.12} Δ {:.12} residual {:.2e}", analytic.lhs, analytic.delta_term, analytic.residual);
    println!("closed-form Δ {:.12}", closed);

    let discrete = integrated_form(&build_rotor_gauge_b(1024)?, eps1, eps2, 0)?;
    println!("discrete:  lhs {:.12} Δ {:.12} residual {:.2e}", discrete.lhs, discrete.delta_term, discrete.residual);
    Ok(())
}

#[allow(dead_code)]
fn main() -> hfgen::Result<()> {
    run_example()
}
