use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use super::{BoundaryCondition, Constants, Grid, HermitianMatrix, ModelId, OperatorFamily};
use crate::eigen::DEGENERACY_GUARD;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gauge {
    /// `H = −½(∂_θ − iε)²` on periodic functions.
    A,
    /// `H_g = −½∂²_θ` on twisted functions `f(0) = e^{i2πε}f(2π)`.
    B,
}

/// Discretized planar rotor threaded by flux `2πε`, parameter `λ = ε`.
#[derive(Debug, Clone)]
pub struct RotorFamily {
    gauge: Gauge,
    grid: Grid,
    constants: Constants,
}

/// Gauge A: covariant Laplacian with Peierls link phases `e^{∓iεh}`.
pub fn build_rotor_gauge_a(n_points: usize) -> Result<RotorFamily> {
    RotorFamily::new(Gauge::A, n_points)
}

/// Gauge B: plain Laplacian whose wrap link carries the twist `e^{−i2πε}`.
pub fn build_rotor_gauge_b(n_points: usize) -> Result<RotorFamily> {
    RotorFamily::new(Gauge::B, n_points)
}

impl RotorFamily {
    pub fn new(gauge: Gauge, n_points: usize) -> Result<Self> {
        Ok(Self {
            gauge,
            grid: Grid::periodic(n_points)?,
            constants: Constants::default(),
        })
    }

    pub fn with_constants(mut self, constants: Constants) -> Self {
        self.constants = constants;
        self
    }

    pub fn gauge(&self) -> Gauge {
        self.gauge
    }

    fn step(&self) -> f64 {
        self.grid.angular_step().expect("rotor grid is periodic")
    }

    /// Nearest-neighbour stencil: `link` is `M[j][j+1]` for every bond
    /// (including the wrap bond `N−1 → 0` before twisting).
    fn assemble(&self, diag: f64, link: Complex64, wrap_twist: Complex64) -> HermitianMatrix {
        let n = self.grid.n_points();
        let mut m = HermitianMatrix::zeros(n);
        for j in 0..n {
            m.set_diag(j, diag);
        }
        for j in 0..n - 1 {
            m.set_lower(j + 1, j, link.conj());
        }
        // M[N−1][0] is the "j → j+1" entry of the last site
        m.set_lower(n - 1, 0, link * wrap_twist);
        m
    }
}

impl OperatorFamily for RotorFamily {
    fn model(&self) -> ModelId {
        match self.gauge {
            Gauge::A => ModelId::RotorGaugeA,
            Gauge::B => ModelId::RotorGaugeB,
        }
    }

    fn grid(&self) -> &Grid {
        &self.grid
    }

    fn constants(&self) -> Constants {
        self.constants
    }

    fn build(&self, epsilon: f64) -> Result<HermitianMatrix> {
        self.extended(epsilon, epsilon)
    }

    fn formal_derivative(&self, epsilon: f64) -> Result<HermitianMatrix> {
        let n = self.grid.n_points();
        match self.gauge {
            Gauge::B => Ok(HermitianMatrix::zeros(n)),
            Gauge::A => {
                // i∂_θ + ε, central difference: K[j][j+1] = i/2h
                let h = self.step();
                Ok(self.assemble(
                    epsilon,
                    Complex64::new(0.0, 0.5 / h),
                    Complex64::new(1.0, 0.0),
                ))
            }
        }
    }

    fn analytic_derivative(&self, epsilon: f64) -> Option<Result<HermitianMatrix>> {
        let h = self.step();
        let n = self.grid.n_points();
        Some(Ok(match self.gauge {
            Gauge::A => {
                // d/dε [−e^{−iεh}/2h²] = i·e^{−iεh}/2h
                let link = Complex64::new(0.0, 0.5 / h) * Complex64::from_polar(1.0, -epsilon * h);
                self.assemble(0.0, link, Complex64::new(1.0, 0.0))
            }
            Gauge::B => {
                // d/dε [−e^{−i2πε}/2h²] = iπ·e^{−i2πε}/h²
                let mut m = HermitianMatrix::zeros(n);
                let v = Complex64::new(0.0, PI / (h * h)) * Complex64::from_polar(1.0, -TAU * epsilon);
                m.set_lower(n - 1, 0, v);
                m
            }
        }))
    }

    fn boundary(&self, epsilon: f64) -> Result<BoundaryCondition> {
        Ok(match self.gauge {
            Gauge::A => BoundaryCondition::Periodic,
            Gauge::B => BoundaryCondition::twisted_for_flux(epsilon),
        })
    }

    fn extended(&self, eps_bulk: f64, eps_domain: f64) -> Result<HermitianMatrix> {
        let h = self.step();
        let kin = 0.5 / (h * h);
        let (link, bc) = match self.gauge {
            Gauge::A => (
                -Complex64::from_polar(kin, -eps_bulk * h),
                BoundaryCondition::Periodic,
            ),
            Gauge::B => (
                Complex64::new(-kin, 0.0),
                BoundaryCondition::twisted_for_flux(eps_domain),
            ),
        };
        // diagonal = sum of the two stored link magnitudes, so the rounded
        // Peierls phases leave no on-site remainder
        let diag = 2.0 * link.norm();
        let phase = bc.twist_phase().expect("rotor domains are (twisted) periodic");
        // ghost f_N = e^{−iφ} f_0
        let twist = if phase == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::from_polar(1.0, -phase)
        };
        Ok(self.assemble(diag, link, twist))
    }

    fn energy_guess(&self, epsilon: f64, mode: i64) -> Option<f64> {
        Some(crate::models::rotor_energy(mode, epsilon))
    }

    fn reference_mode(&self, epsilon: f64, mode: i64) -> Option<Vec<Complex64>> {
        let n = self.grid.n_points();
        let k = match self.gauge {
            Gauge::A => mode as f64,
            Gauge::B => mode as f64 - epsilon,
        };
        let norm = 1.0 / (n as f64).sqrt();
        Some(
            self.grid
                .points()
                .iter()
                .map(|&t| Complex64::from_polar(norm, k * t))
                .collect(),
        )
    }

    fn check_guard(&self, epsilon: f64, mode: i64) -> Result<()> {
        match rotor_degeneracy_distance(epsilon, mode) {
            d if d >= DEGENERACY_GUARD => Ok(()),
            _ => Err(Error::DegeneracyGuard {
                lambda: epsilon,
                mode,
                guard: DEGENERACY_GUARD,
            }),
        }
    }
}

/// Distance from `ε` to the nearest flux at which mode `n` crosses another
/// level. `E_n = E_m` iff `n + m = 2ε`, so the crossings of `n` sit at
/// `ε ∈ ½ℤ` except `ε = n` (where the partner would be `n` itself).
pub fn rotor_degeneracy_distance(epsilon: f64, mode: i64) -> f64 {
    let twice = 2.0 * epsilon;
    let k = twice.round();
    let off = (twice - k).abs();
    if k as i64 == 2 * mode {
        0.5 * (1.0 - off)
    } else {
        0.5 * off
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operator::{total_matrix_derivative, DerivativeRule};

    fn max_diff(a: &HermitianMatrix, b: &HermitianMatrix) -> f64 {
        let (da, db) = (a.to_dense(), b.to_dense());
        da.iter()
            .flatten()
            .zip(db.iter().flatten())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn zero_flux_gauges_coincide() {
        let a = build_rotor_gauge_a(64).unwrap().build(0.0).unwrap();
        let b = build_rotor_gauge_b(64).unwrap().build(0.0).unwrap();
        assert_eq!(max_diff(&a, &b), 0.0);
        // standard periodic Laplacian
        let h = TAU / 64.0;
        assert!((a.get(0, 0).re - 1.0 / (h * h)).abs() < 1e-9);
        assert!((a.get(0, 63).re + 0.5 / (h * h)).abs() < 1e-9);
        assert_eq!(a.get(0, 63).im, 0.0);
    }

    #[test]
    fn gauge_b_is_diagonal_unitary_transform_of_gauge_a() {
        let n = 32;
        let eps = 0.37;
        let fam = build_rotor_gauge_a(n).unwrap();
        let a = fam.build(eps).unwrap().to_dense();
        let b = build_rotor_gauge_b(n).unwrap().build(eps).unwrap().to_dense();
        let theta = fam.grid().points();
        for j in 0..n {
            for k in 0..n {
                let u = Complex64::from_polar(1.0, -eps * (theta[j] - theta[k]));
                assert!((u * a[j][k] - b[j][k]).norm() < 1e-9, "{j} {k}");
            }
        }
    }

    #[test]
    fn gauge_b_derivative_lives_on_wrap_pair() {
        let fam = build_rotor_gauge_b(64).unwrap();
        let d = total_matrix_derivative(&fam, 0.25, DerivativeRule::Analytic).unwrap();
        let entries: Vec<_> = d.lower_entries().collect();
        assert_eq!(entries.len(), 1);
        assert_eq!((entries[0].0, entries[0].1), (63, 0));
        assert!(d.diagonal().iter().all(|&x| x == 0.0));
        assert!(fam.formal_derivative(0.25).unwrap().is_zero());
    }

    #[test]
    fn analytic_derivative_matches_central_difference() {
        for gauge in [Gauge::A, Gauge::B] {
            let fam = RotorFamily::new(gauge, 64).unwrap();
            let exact = total_matrix_derivative(&fam, 0.3, DerivativeRule::Analytic).unwrap();
            let scale = exact.max_abs();
            let e1 = max_diff(
                &exact,
                &total_matrix_derivative(&fam, 0.3, DerivativeRule::CentralDifference(1e-2)).unwrap(),
            );
            let e2 = max_diff(
                &exact,
                &total_matrix_derivative(&fam, 0.3, DerivativeRule::CentralDifference(5e-3)).unwrap(),
            );
            assert!(e1 / scale < 1e-2, "{gauge:?} {e1}");
            let ratio = e1 / e2;
            assert!((3.5..4.5).contains(&ratio), "{gauge:?} ratio {ratio}");
        }
    }

    #[test]
    fn formal_derivative_is_central_difference_plus_flux() {
        let fam = build_rotor_gauge_a(16).unwrap();
        let k = fam.formal_derivative(0.2).unwrap();
        let h = TAU / 16.0;
        assert_eq!(k.get(3, 3).re, 0.2);
        assert!((k.get(3, 4) - Complex64::new(0.0, 0.5 / h)).norm() < 1e-15);
        assert!((k.get(15, 0) - Complex64::new(0.0, 0.5 / h)).norm() < 1e-15);
        assert!((k.get(0, 15) - Complex64::new(0.0, -0.5 / h)).norm() < 1e-15);
    }

    #[test]
    fn degeneracy_distance_is_mode_aware() {
        assert!(rotor_degeneracy_distance(0.0, 1) < 1e-15);
        assert!((rotor_degeneracy_distance(0.0, 0) - 0.5).abs() < 1e-15);
        assert!((rotor_degeneracy_distance(0.25, 1) - 0.25).abs() < 1e-15);
        assert!((rotor_degeneracy_distance(1.0, 1) - 0.5).abs() < 1e-15);
        assert!((rotor_degeneracy_distance(0.9995, 1) - 0.4995).abs() < 1e-12);
        assert!((rotor_degeneracy_distance(0.5004, 0) - 0.0004).abs() < 1e-12);
        let fam = build_rotor_gauge_b(64).unwrap();
        assert!(fam.check_guard(0.5004, 0).is_err());
        assert!(fam.check_guard(0.0, 0).is_ok());
        assert!(fam.check_guard(0.0, 2).is_err());
    }
}
