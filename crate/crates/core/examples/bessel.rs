// Modified Bessel functions and the normalized radial ground state.

use hfgen::models::{bessel_k0, bessel_k0_flagged, bessel_k1, radial_ground_state};

pub fn run_example() -> hfgen::Result<()> {
    for x in [0.01, 0.5, 2.0, 5.0, 30.0] {
        println!("x = {x:>5}: K0 = {:.15e}  K1 = {:.15e}", bessel_k0(x)?, bessel_k1(x)?);
    }
    let far = bessel_k0_flagged(800.0)?;
    println!("K0(800) = {} (underflow: {})", far.value, far.underflow);

    // 2π∫Ψ²r dr in u = ln r, by Simpson on a fine grid
    let kappa = 1.5;
    let (a, b, n) = ((1e-8f64).ln(), (40.0f64).ln(), 20_000);
    let h = (b - a) / n as f64;
    let mut sum = 0.0;
    for k in 0..=n {
        let r = (a + k as f64 * h).exp();
        let w = if k == 0 || k == n { 1.0 } else if k % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * radial_ground_state(kappa, r)?.powi(2) * r * r;
    }
    println!("norm of Ψ0 at κ = {kappa}: {:.12}", std::f64::consts::TAU * sum * h / 3.0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> hfgen::Result<()> {
    run_example()
}
