//! Continuum rotor route: eigenfunctions and their derivatives are kept in the
//! closed family `(a + bθ)·e^{ikθ}/√2π`, operators act symbolically, and inner
//! products are evaluated by composite Gauss–Legendre quadrature.

use std::f64::consts::{PI, TAU};

use super::reports::{IntegratedReport, OffDiagReport};
use crate::eigen::DEGENERACY_GUARD;
use crate::error::{Error, Result};
use crate::models::rotor_energy;
use crate::operator::rotor_degeneracy_distance;
use crate::operator::Gauge;
use crate::Complex64;

const PANELS: usize = 32;
const ORDER: usize = 16;

/// `(a + bθ)·e^{ikθ}/√2π` on `[0, 2π]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Wave {
    pub a: Complex64,
    pub b: Complex64,
    pub k: f64,
}

fn wavenumber(gauge: Gauge, n: i64, epsilon: f64) -> f64 {
    match gauge {
        Gauge::A => n as f64,
        Gauge::B => n as f64 - epsilon,
    }
}

impl Wave {
    pub fn eigenfunction(gauge: Gauge, n: i64, epsilon: f64) -> Self {
        Self { a: Complex64::new(1.0, 0.0), b: Complex64::new(0.0, 0.0), k: wavenumber(gauge, n, epsilon) }
    }

    /// `∂_εΨ_n`: zero in gauge A, `−iθΨ_n` in gauge B.
    pub fn eigenfunction_derivative(gauge: Gauge, n: i64, epsilon: f64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let b = match gauge {
            Gauge::A => zero,
            Gauge::B => Complex64::new(0.0, -1.0),
        };
        Self { a: zero, b, k: wavenumber(gauge, n, epsilon) }
    }

    pub fn eval(&self, theta: f64) -> Complex64 {
        (self.a + self.b * theta) * Complex64::from_polar(1.0 / TAU.sqrt(), self.k * theta)
    }

    pub fn d_theta(&self) -> Self {
        let ik = Complex64::new(0.0, self.k);
        Self { a: self.b + ik * self.a, b: ik * self.b, k: self.k }
    }

    /// `icΨ` added to the function, for phase-convention checks.
    pub fn plus_phase(&self, c: f64, psi: &Wave) -> Self {
        assert_eq!(self.k, psi.k);
        let ic = Complex64::new(0.0, c);
        Self { a: self.a + ic * psi.a, b: self.b + ic * psi.b, k: self.k }
    }

    /// Formal `H(ε)`: `½(−i∂_θ − ε)²` in gauge A, `−½∂²_θ` in gauge B.
    pub fn apply_h(&self, gauge: Gauge, epsilon: f64) -> Self {
        let q = match gauge {
            Gauge::A => self.k - epsilon,
            Gauge::B => self.k,
        };
        let iq = Complex64::new(0.0, q);
        Self { a: 0.5 * q * q * self.a - iq * self.b, b: 0.5 * q * q * self.b, k: self.k }
    }

    /// Formal `∂H/∂ε`: `i∂_θ + ε` in gauge A, zero in gauge B.
    pub fn apply_dh(&self, gauge: Gauge, epsilon: f64) -> Self {
        match gauge {
            Gauge::A => {
                let s = epsilon - self.k;
                Self { a: Complex64::i() * self.b + s * self.a, b: s * self.b, k: self.k }
            }
            Gauge::B => Self { a: 0.0.into(), b: 0.0.into(), k: self.k },
        }
    }

    /// `∫₀^{2π} conj(self)·other dθ`.
    pub fn inner(&self, other: &Wave) -> Complex64 {
        let (x, w) = gauss_legendre(ORDER);
        let width = TAU / PANELS as f64;
        let mut sum = Complex64::new(0.0, 0.0);
        for p in 0..PANELS {
            let mid = (p as f64 + 0.5) * width;
            for (xi, wi) in x.iter().zip(&w) {
                let t = mid + 0.5 * width * xi;
                sum += self.eval(t).conj() * other.eval(t) * (0.5 * width * wi);
            }
        }
        sum
    }
}

/// Gauss–Legendre nodes and weights on `[−1, 1]` (Newton on `P_n`).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for j in 2..=n {
                let j = j as f64;
                let p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            if n == 1 {
                p0 = 1.0;
                p1 = z;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

fn guard(epsilon: f64, n: i64) -> Result<()> {
    if rotor_degeneracy_distance(epsilon, n) < DEGENERACY_GUARD {
        return Err(Error::DegeneracyGuard { lambda: epsilon, mode: n, guard: DEGENERACY_GUARD });
    }
    Ok(())
}

/// Integrated form from the continuum eigenfunctions. `H(ε2)` acts on
/// `Ψ(ε1)` through its formal expression, ignoring the `ε2` domain.
pub fn integrated_form_analytic(gauge: Gauge, eps1: f64, eps2: f64, n: i64) -> Result<IntegratedReport> {
    if eps1 == eps2 {
        return Err(Error::Precondition("integrated form needs λ1 ≠ λ2".into()));
    }
    guard(eps1, n)?;
    guard(eps2, n)?;
    let psi1 = Wave::eigenfunction(gauge, n, eps1);
    let psi2 = Wave::eigenfunction(gauge, n, eps2);
    let overlap = psi2.inner(&psi1);
    let lhs = overlap * (rotor_energy(n, eps1) - rotor_energy(n, eps2));
    let h2_psi1 = psi2.inner(&psi1.apply_h(gauge, eps2));
    let matrix_term = psi2.inner(&psi1.apply_h(gauge, eps1)) - h2_psi1;
    let delta_term = h2_psi1 - psi2.apply_h(gauge, eps2).inner(&psi1);
    Ok(IntegratedReport {
        lambda1: eps1,
        lambda2: eps2,
        mode: n,
        overlap,
        lhs,
        matrix_term,
        delta_term,
        residual: (lhs - matrix_term - delta_term).norm(),
    })
}

/// Off-diagonal form from the continuum eigenfunctions.
pub fn off_diagonal_form_analytic(gauge: Gauge, epsilon: f64, n: i64, m: i64) -> Result<OffDiagReport> {
    if n == m {
        return Err(Error::Precondition("off-diagonal form needs n ≠ m".into()));
    }
    guard(epsilon, n)?;
    guard(epsilon, m)?;
    let psi_n = Wave::eigenfunction(gauge, n, epsilon);
    let psi_m = Wave::eigenfunction(gauge, m, epsilon);
    let d_m = Wave::eigenfunction_derivative(gauge, m, epsilon);
    let lhs = psi_n.inner(&d_m) * (rotor_energy(m, epsilon) - rotor_energy(n, epsilon));
    let expectation = psi_n.inner(&psi_m.apply_dh(gauge, epsilon));
    let delta = psi_n.inner(&d_m.apply_h(gauge, epsilon)) - psi_n.apply_h(gauge, epsilon).inner(&d_m);
    Ok(OffDiagReport {
        lambda: epsilon,
        n,
        m,
        lhs,
        expectation_formal: expectation,
        delta_nm: delta,
        residual: (lhs - expectation - delta).norm(),
    })
}
