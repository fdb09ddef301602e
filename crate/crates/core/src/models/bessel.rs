//! Modified Bessel functions `I₀, I₁, K₀, K₁` of real positive argument.
//!
//! `x ≤ 2`: ascending series. `K₀`, `K₁` for `x > 2`: Steed's continued
//! fraction (Temme's CF2), which yields both orders at once and stays accurate
//! down to the switchover where the asymptotic series would not.

use std::f64::consts::PI;

use super::EULER_GAMMA;
use crate::error::{Error, Result};

/// `K₀(x)`, `K₁(x)` underflow to zero beyond this argument.
pub const UNDERFLOW_THRESHOLD: f64 = 700.0;

const SERIES_LIMIT: f64 = 2.0;
const MAX_TERMS: usize = 500;

/// A function value together with an underflow flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: f64,
    pub underflow: bool,
}

fn check_arg(x: f64) -> Result<()> {
    if x > 0.0 && !x.is_nan() {
        Ok(())
    } else {
        Err(Error::NonPositiveArgument(x))
    }
}

pub fn bessel_i0(x: f64) -> Result<f64> {
    check_arg(x)?;
    Ok(i_series(0, x))
}

pub fn bessel_i1(x: f64) -> Result<f64> {
    check_arg(x)?;
    Ok(i_series(1, x))
}

pub fn bessel_k0(x: f64) -> Result<f64> {
    bessel_k0_flagged(x).map(|e| e.value)
}

pub fn bessel_k1(x: f64) -> Result<f64> {
    bessel_k1_flagged(x).map(|e| e.value)
}

pub fn bessel_k0_flagged(x: f64) -> Result<Evaluation> {
    k_pair(x).map(|(k0, _, underflow)| Evaluation { value: k0, underflow })
}

pub fn bessel_k1_flagged(x: f64) -> Result<Evaluation> {
    k_pair(x).map(|(_, k1, underflow)| Evaluation { value: k1, underflow })
}

fn k_pair(x: f64) -> Result<(f64, f64, bool)> {
    check_arg(x)?;
    if x > UNDERFLOW_THRESHOLD {
        return Ok((0.0, 0.0, true));
    }
    let (k0, k1) = if x <= SERIES_LIMIT {
        (k0_series(x), k1_series(x))
    } else {
        k_steed(x)
    };
    Ok((k0, k1, false))
}

/// `I_ν(x) = Σ (x/2)^{2k+ν} / (k! (k+ν)!)`, `ν ∈ {0, 1}`.
fn i_series(order: u32, x: f64) -> f64 {
    let y = 0.25 * x * x;
    let mut term = if order == 0 { 1.0 } else { 0.5 * x };
    let mut sum = term;
    for k in 1..MAX_TERMS {
        let k = k as f64;
        term *= y / (k * (k + order as f64));
        sum += term;
        if term < sum * f64::EPSILON {
            break;
        }
    }
    sum
}

/// `K₀(x) = −(ln(x/2) + γ) I₀(x) + Σ_{k≥1} H_k (x²/4)^k / (k!)²`.
fn k0_series(x: f64) -> f64 {
    let y = 0.25 * x * x;
    let log_term = (0.5 * x).ln() + EULER_GAMMA;
    let mut term = 1.0; // (x²/4)^k / (k!)²
    let mut harmonic = 0.0;
    let mut sum = -log_term;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        term *= y / (kf * kf);
        harmonic += 1.0 / kf;
        let add = term * (harmonic - log_term);
        sum += add;
        if add.abs() < sum.abs() * f64::EPSILON && term < f64::EPSILON {
            break;
        }
    }
    sum
}

/// `K₁(x) = 1/x + ln(x/2) I₁(x) − (x/4) Σ_{k≥0} (ψ(k+1) + ψ(k+2)) (x²/4)^k / (k!(k+1)!)`.
fn k1_series(x: f64) -> f64 {
    let y = 0.25 * x * x;
    let log_half = (0.5 * x).ln();
    let mut term = 1.0; // (x²/4)^k / (k!(k+1)!)
    let mut psi_k1 = -EULER_GAMMA; // ψ(k+1)
    let mut psi_k2 = 1.0 - EULER_GAMMA; // ψ(k+2)
    let mut sum = 0.0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        if k > 0 {
            term *= y / (kf * (kf + 1.0));
            psi_k1 += 1.0 / kf;
            psi_k2 += 1.0 / (kf + 1.0);
        }
        // ln(x/2) I₁ folded in: I₁ = (x/2) Σ (x²/4)^k / (k!(k+1)!)
        let add = term * (2.0 * log_half - psi_k1 - psi_k2);
        sum += add;
        if k > 0 && add.abs() < sum.abs() * f64::EPSILON && term < f64::EPSILON {
            break;
        }
    }
    1.0 / x + 0.25 * x * sum
}

/// Steed/Temme CF2 for `ν = 0`, valid for `x ≳ 2`. Returns `(K₀, K₁)`.
fn k_steed(x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut a = -a1;
    let mut c = a1;
    let mut q = c;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_TERMS * 20 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 0.5 * f64::EPSILON {
            break;
        }
    }
    h *= a1;
    let k0 = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        let cases = [
            (0.1, 2.427_069_024_702_017, 9.853_844_780_870_606),
            (1.0, 0.421_024_438_240_708_3, 0.601_907_230_197_234_6),
            (2.0, 0.113_893_872_749_533_44, 0.139_865_881_816_522_44),
            (5.0, 3.691_098_334_042_594e-3, 4.044_613_445_452_164e-3),
        ];
        for (x, k0, k1) in cases {
            let a = bessel_k0(x).unwrap();
            let b = bessel_k1(x).unwrap();
            assert!(((a - k0) / k0).abs() < 1e-13, "K0({x}) = {a}");
            assert!(((b - k1) / k1).abs() < 1e-13, "K1({x}) = {b}");
        }
        assert!((bessel_i0(1.0).unwrap() - 1.266_065_877_752_008_4).abs() < 1e-15);
        assert!((bessel_i1(1.0).unwrap() - 0.565_159_103_992_485).abs() < 1e-15);
    }

    #[test]
    fn branches_agree_at_switchover() {
        let below = (k0_series(2.0), k1_series(2.0));
        let above = k_steed(2.0);
        assert!(((below.0 - above.0) / above.0).abs() < 1e-14);
        assert!(((below.1 - above.1) / above.1).abs() < 1e-14);
    }

    #[test]
    fn small_argument_log_asymptotics() {
        let x: f64 = 1e-6;
        let lead = -((0.5 * x).ln() + EULER_GAMMA);
        assert!(((bessel_k0(x).unwrap() - lead) / lead).abs() < 1e-9);
        assert!((x * bessel_k1(x).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn domain_and_underflow() {
        assert_eq!(bessel_k0(0.0), Err(Error::NonPositiveArgument(0.0)));
        assert!(bessel_k0(-1.0).is_err());
        assert!(bessel_k0(f64::NAN).is_err());
        let e = bessel_k0_flagged(800.0).unwrap();
        assert_eq!(e, Evaluation { value: 0.0, underflow: true });
        assert!(!bessel_k0_flagged(600.0).unwrap().underflow);
        assert!(bessel_k0(600.0).unwrap() > 0.0);
    }

    #[test]
    fn derivative_of_k0_is_minus_k1() {
        let x = 2.0;
        let h = 1e-4;
        let d = (bessel_k0(x - 2.0 * h).unwrap() - 8.0 * bessel_k0(x - h).unwrap()
            + 8.0 * bessel_k0(x + h).unwrap()
            - bessel_k0(x + 2.0 * h).unwrap())
            / (12.0 * h);
        assert!((d + bessel_k1(x).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn wronskian() {
        for &x in &[0.01, 0.3, 1.0, 1.99, 2.01, 4.0, 10.0, 25.0] {
            let w = bessel_i0(x).unwrap() * bessel_k1(x).unwrap()
                + bessel_i1(x).unwrap() * bessel_k0(x).unwrap();
            assert!((w * x - 1.0).abs() < 1e-9, "x={x}: {}", w * x);
        }
    }

    #[test]
    fn k0_decreasing_and_positive() {
        let xs: Vec<f64> = (0..400).map(|i| 1e-3 * (30.0f64 / 1e-3).powf(i as f64 / 399.0)).collect();
        let ks: Vec<f64> = xs.iter().map(|&x| bessel_k0(x).unwrap()).collect();
        assert!(ks.iter().all(|&k| k > 0.0));
        assert!(ks.windows(2).all(|w| w[1] < w[0]));
    }
}
