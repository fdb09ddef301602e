#![allow(clippy::needless_range_loop)]

use hfgen::eigen::{nearest_eigenpairs, solve_mode};
use hfgen::hf::{hermiticity_null_test, Wave};
use hfgen::models::{bessel_k0, bessel_k1};
use hfgen::operator::rotor_degeneracy_distance;
use hfgen::{
    align_phase, anomaly_boundary_route, build_rotor_gauge_b, eigh, Complex64, Gauge, HermitianMatrix, ModelId,
};
use proptest::prelude::*;

fn hermitian(n: usize, diag: Vec<f64>, off: Vec<(f64, f64)>) -> HermitianMatrix {
    let mut m = HermitianMatrix::zeros(n);
    let mut k = 0;
    for i in 0..n {
        m.set_diag(i, diag[i]);
        for j in 0..i {
            m.set_lower(i, j, Complex64::new(off[k].0, off[k].1));
            k += 1;
        }
    }
    m
}

fn matrix_strategy() -> impl Strategy<Value = HermitianMatrix> {
    (2usize..9).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec(-3.0..3.0f64, n),
            prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n * (n - 1) / 2),
        )
            .prop_map(|(n, d, o)| hermitian(n, d, o))
    })
}

fn off_guard() -> impl Strategy<Value = (f64, i64)> {
    (-2.0..2.0f64, -4i64..=4).prop_filter("degeneracy guard", |(e, n)| rotor_degeneracy_distance(*e, *n) >= 1e-2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dense_decomposition_reconstructs(m in matrix_strategy()) {
        let pairs = eigh(&m).unwrap();
        let d = m.to_dense();
        let n = m.dim();
        for i in 0..n {
            for j in 0..n {
                let r: Complex64 = pairs.iter().map(|p| p.vector[i] * p.vector[j].conj() * p.energy).sum();
                prop_assert!((r - d[i][j]).norm() <= 1e-10);
            }
        }
    }

    #[test]
    fn shift_invert_finds_an_exact_eigenvalue(m in matrix_strategy(), shift in -4.0..4.0f64) {
        let all: Vec<f64> = eigh(&m).unwrap().iter().map(|p| p.energy).collect();
        let target = all.iter().copied().min_by(|a, b| (a - shift).abs().total_cmp(&(b - shift).abs())).unwrap();
        let second = all.iter().map(|e| (e - shift).abs()).filter(|d| *d > (target - shift).abs() + 1e-9).fold(f64::INFINITY, f64::min);
        // well-posed only when the nearest level is separated from the next
        prop_assume!(second > 1.5 * (target - shift).abs() + 1e-3);
        match nearest_eigenpairs(&m, shift, 1, &[]) {
            Ok(p) => prop_assert!((p[0].energy - target).abs() <= 1e-9, "{} vs {}", p[0].energy, target),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn phase_alignment_is_idempotent_and_phase_free(phase in -3.1..3.1f64, seed in 0u64..1000) {
        let v: Vec<Complex64> = (0..12).map(|k| Complex64::new(((k as u64 + seed) as f64).sin(), ((k as u64 * 7 + seed) as f64).cos())).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let v: Vec<Complex64> = v.iter().map(|z| z / norm).collect();
        let rot: Vec<Complex64> = v.iter().map(|z| z * Complex64::from_polar(1.0, phase)).collect();
        let a = align_phase(&v, &rot).unwrap();
        let aa = align_phase(&v, &a).unwrap();
        prop_assert_eq!(&a, &aa);
        for (x, y) in a.iter().zip(&v) {
            prop_assert!((x - y).norm() < 1e-14);
        }
    }

    #[test]
    fn boundary_route_is_closed_form((eps, n) in off_guard()) {
        let v = anomaly_boundary_route(ModelId::RotorGaugeB, eps, n).unwrap();
        prop_assert!((v - (eps - n as f64)).abs() <= 1e-12);
        prop_assert_eq!(anomaly_boundary_route(ModelId::RotorGaugeA, eps, n).unwrap(), 0.0);
    }

    #[test]
    fn anomaly_is_phase_convention_free((eps, n) in off_guard(), c in -10.0..10.0f64) {
        let psi = Wave::eigenfunction(Gauge::B, n, eps);
        let d = Wave::eigenfunction_derivative(Gauge::B, n, eps);
        let delta = |dp: &Wave| psi.inner(&dp.apply_h(Gauge::B, eps)) - psi.apply_h(Gauge::B, eps).inner(dp);
        let base = delta(&d);
        prop_assert!((base - (eps - n as f64)).norm() < 1e-10);
        prop_assert!((delta(&d.plus_phase(c, &psi)) - base).norm() <= 1e-10);
    }

    #[test]
    fn spectrum_is_flux_periodic(eps in -1.0..1.0f64) {
        let fam = build_rotor_gauge_b(64).unwrap();
        let s0: Vec<f64> = eigh(&hfgen::OperatorFamily::build(&fam, eps).unwrap()).unwrap().iter().map(|p| p.energy).collect();
        let s1: Vec<f64> = eigh(&hfgen::OperatorFamily::build(&fam, eps + 1.0).unwrap()).unwrap().iter().map(|p| p.energy).collect();
        for (a, b) in s0.iter().zip(&s1) {
            prop_assert!((a - b).abs() / a.abs().max(1.0) <= 1e-12);
        }
    }

    #[test]
    fn spectral_flow_relabels_modes((eps, n) in (0.05..0.45f64, -3i64..=3)) {
        let fam = build_rotor_gauge_b(128).unwrap();
        let a = solve_mode(&fam, eps, n).unwrap().energy;
        let b = solve_mode(&fam, eps + 1.0, n + 1).unwrap().energy;
        prop_assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn k0_decreases_and_matches_derivative(x in 0.01..50.0f64) {
        let (a, b) = (bessel_k0(x).unwrap(), bessel_k0(x * 1.01).unwrap());
        prop_assert!(a > b && b > 0.0);
        let h = 1e-5 * x;
        let fd = (bessel_k0(x + h).unwrap() - bessel_k0(x - h).unwrap()) / (2.0 * h);
        prop_assert!((fd + bessel_k1(x).unwrap()).abs() <= 1e-6 * bessel_k1(x).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn discrete_hermiticity_defect_vanishes((eps, n) in (0.05..0.45f64, -2i64..=2)) {
        let fam = build_rotor_gauge_b(256).unwrap();
        let d = hermiticity_null_test(&fam, eps, n, 1e-5).unwrap();
        prop_assert!(d.norm() <= 1e-10);
    }
}
