use std::f64::consts::PI;

use crate::operator::Gauge;
use crate::Complex64;

/// `E_n(ε) = ½(n − ε)²` (ħ = m = 1).
pub fn rotor_energy(n: i64, epsilon: f64) -> f64 {
    let q = n as f64 - epsilon;
    0.5 * q * q
}

/// Boundary anomaly of the twisted-domain rotor, `Δ_n = ε − n`.
pub fn rotor_anomaly_exact(n: i64, epsilon: f64) -> f64 {
    epsilon - n as f64
}

/// Normalized eigenfunction on `[0, 2π)`: `e^{inθ}` in gauge A, `e^{i(n−ε)θ}` in gauge B.
pub fn rotor_eigenfunction(gauge: Gauge, n: i64, epsilon: f64, theta: f64) -> Complex64 {
    let k = match gauge {
        Gauge::A => n as f64,
        Gauge::B => n as f64 - epsilon,
    };
    Complex64::from_polar(1.0 / (2.0 * PI).sqrt(), k * theta)
}

/// Closed-form rotor data at fixed flux.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotorReference {
    pub epsilon: f64,
}

impl RotorReference {
    pub fn new(epsilon: f64) -> Self {
        Self { epsilon }
    }

    pub fn energy(&self, n: i64) -> f64 {
        rotor_energy(n, self.epsilon)
    }

    pub fn energy_derivative(&self, n: i64) -> f64 {
        self.epsilon - n as f64
    }

    pub fn eigenfunction(&self, gauge: Gauge, n: i64, theta: f64) -> Complex64 {
        rotor_eigenfunction(gauge, n, self.epsilon, theta)
    }

    /// Anomaly of the twisted (gauge B) description.
    pub fn anomaly(&self, n: i64) -> f64 {
        rotor_anomaly_exact(n, self.epsilon)
    }

    /// Anomaly in a given gauge: zero for the untwisted domain.
    pub fn anomaly_in(&self, gauge: Gauge, n: i64) -> f64 {
        match gauge {
            Gauge::A => 0.0,
            Gauge::B => self.anomaly(n),
        }
    }

    /// `⟨∂H/∂ε⟩` of the formal derivative in a given gauge.
    pub fn formal_expectation(&self, gauge: Gauge, n: i64) -> f64 {
        match gauge {
            Gauge::A => self.epsilon - n as f64,
            Gauge::B => 0.0,
        }
    }
}
