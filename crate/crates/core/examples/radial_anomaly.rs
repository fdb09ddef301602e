// Ground state of the 2D delta potential as a log boundary condition at the
// origin. The boundary condition carries the whole κ dependence, so
// `⟨∂H/∂κ⟩ = 0` and the anomaly supplies `dE/dκ = −κ`.

use hfgen::models::{radial_energy_exact, RadialReference};
use hfgen::{build_radial, check_generalized_hf, Grid};

pub fn run_example() -> hfgen::Result<()> {
    for kappa in [1.0, 2.0] {
        let family = build_radial(Grid::radial_default(kappa)?)?;
        let r = check_generalized_hf(&family, kappa, 0, 1e-5)?;
        let reference = RadialReference::new(kappa)?;
        println!("κ = {kappa}");
        println!("  E0        {:.9}  (exact {:.9})", r.energy, radial_energy_exact(kappa));
        println!("  dE/dκ     {:.6}", r.de_dlambda);
        println!("  <∂H/∂κ>   {:.3e}", r.expectation_formal);
        println!("  Δ matrix  {:.6}", r.delta_matrix_route);
        println!(
            "  Δ bracket {:.12}  (exact {})",
            r.delta_boundary_route.unwrap_or(f64::NAN),
            reference.anomaly()
        );
        println!("  residual  {:.2e}", r.residual_generalized);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hfgen::Result<()> {
    run_example()
}
