use hfgen::hf::{hermiticity_defect, rotor_boundary_bracket, Wave};
use hfgen::models::rotor_energy;
use hfgen::{
    anomaly_boundary_route, anomaly_matrix_route, build_radial, build_rotor_gauge_a,
    build_rotor_gauge_b, check_generalized_hf, energy_derivative, hf_expectation, integrated_form,
    integrated_form_analytic, off_diagonal_form, off_diagonal_form_analytic, Complex64, Error,
    Gauge, Grid, ModelId, OperatorFamily,
};

#[test]
fn zero_flux_gauge_a_is_trivial() {
    let fa = build_rotor_gauge_a(512).unwrap();
    let r = check_generalized_hf(&fa, 0.0, 0, 1e-5).unwrap();
    assert!(r.de_dlambda.abs() < 1e-9);
    assert!(r.delta_matrix_route.abs() < 1e-9);
    assert!(r.expectation_formal.abs() < 1e-9);
    assert_eq!(r.delta_boundary_route, Some(0.0));
}

#[test]
fn report_terms_are_consistent() {
    let fb = build_rotor_gauge_b(1024).unwrap();
    let r = check_generalized_hf(&fb, 0.2, 1, 1e-5).unwrap();
    assert!(r.is_finite());
    assert_eq!(r.model, ModelId::RotorGaugeB);
    assert_eq!((r.grid_size, r.fd_step, r.mode), (1024, 1e-5, 1));
    assert!((r.residual_generalized - (r.de_dlambda - r.expectation_formal - r.delta_matrix_route).abs()).abs() < 1e-15);
    assert!((r.residual_naive - (r.de_dlambda - r.expectation_formal).abs()).abs() < 1e-15);
    assert_eq!(r.de_dlambda, energy_derivative(&fb, 0.2, 1, 1e-5).unwrap());
    assert_eq!(r.delta_matrix_route, anomaly_matrix_route(&fb, 0.2, 1, 1e-5).unwrap());
    assert_eq!(hf_expectation(&fb, 0.2, 1).unwrap(), 0.0);
    assert!((r.energy - rotor_energy(1, 0.2)).abs() < 1e-5);
}

#[test]
fn matrix_route_converges_to_boundary_route_at_second_order() {
    let exact = anomaly_boundary_route(ModelId::RotorGaugeB, 0.3, 2).unwrap();
    let err = |n| (anomaly_matrix_route(&build_rotor_gauge_b(n).unwrap(), 0.3, 2, 1e-5).unwrap() - exact).abs();
    let ratio = err(128) / err(256);
    assert!((3.5..4.5).contains(&ratio), "{ratio}");
}

#[test]
fn gauge_a_anomaly_vanishes_under_refinement() {
    let d = |n| anomaly_matrix_route(&build_rotor_gauge_a(n).unwrap(), 0.3, 2, 1e-5).unwrap().abs();
    assert!(d(256) < d(128) / 3.5);
    assert!(d(1024) < 1e-4);
}

#[test]
fn radial_formal_derivative_vanishes_and_anomaly_carries_de() {
    for kappa in [0.7, 1.3] {
        let fr = build_radial(Grid::radial_default(kappa).unwrap()).unwrap();
        let r = check_generalized_hf(&fr, kappa, 0, 1e-5).unwrap();
        assert_eq!(r.expectation_formal, 0.0);
        assert!((r.de_dlambda + kappa).abs() < 1e-2 * kappa);
        assert!((r.delta_matrix_route + kappa).abs() < 1e-2 * kappa);
        assert!((r.delta_boundary_route.unwrap() + kappa).abs() < 1e-6 * kappa);
        assert!(r.residual_naive > 0.5 * kappa);
    }
}

#[test]
fn boundary_bracket_of_constant_jet_is_zero() {
    // periodic data: both endpoint brackets cancel
    let v = rotor_boundary_bracket(|t: f64| {
        let z = Complex64::from_polar(1.0, 3.0 * t);
        (z, Complex64::i() * 3.0 * z, z, Complex64::i() * 3.0 * z)
    });
    assert!(v.abs() < 1e-12);
}

#[test]
fn continuum_forms_close() {
    for (e1, e2, n) in [(0.25, 0.1, 0), (0.3, 0.35, 1), (-0.2, 0.15, -1)] {
        let r = integrated_form_analytic(Gauge::B, e1, e2, n).unwrap();
        assert!(r.residual < 1e-12);
        // gauge A: no domain change, no anomaly
        let a = integrated_form_analytic(Gauge::A, e1, e2, n).unwrap();
        assert!(a.delta_term.norm() < 1e-12);
        assert!(a.residual < 1e-12);
    }
    let a = off_diagonal_form_analytic(Gauge::A, 0.25, 0, 1).unwrap();
    assert!(a.delta_nm.norm() < 1e-12 && a.residual < 1e-12);
    assert!(matches!(off_diagonal_form_analytic(Gauge::B, 0.25, 1, 1), Err(Error::Precondition(_))));
    assert!(matches!(integrated_form_analytic(Gauge::B, 0.2, 0.2, 0), Err(Error::Precondition(_))));
    assert!(matches!(integrated_form_analytic(Gauge::B, 0.5, 0.2, 0), Err(Error::DegeneracyGuard { .. })));
}

#[test]
fn discrete_integrated_form_balances_and_approaches_continuum_modulus() {
    let fb = build_rotor_gauge_b(1024).unwrap();
    let r = integrated_form(&fb, 0.25, 0.1, 0).unwrap();
    assert!(r.residual < 1e-10);
    assert!(r.matrix_term.norm() < 1e-10);
    let c = integrated_form_analytic(Gauge::B, 0.25, 0.1, 0).unwrap();
    assert!((r.delta_term.norm() - c.delta_term.norm()).abs() < 1e-5);
    let fa = build_rotor_gauge_a(1024).unwrap();
    let a = integrated_form(&fa, 0.25, 0.1, 0).unwrap();
    assert!(a.residual < 1e-10);
    assert!(a.delta_term.norm() < 1e-10);
}

#[test]
fn discrete_off_diagonal_form_balances() {
    let fb = build_rotor_gauge_b(1024).unwrap();
    for (n, m) in [(0, 1), (0, 2), (1, 2)] {
        let r = off_diagonal_form(&fb, 0.25, n, m, 1e-5).unwrap();
        assert!(r.residual < 1e-8, "({n},{m}) {}", r.residual);
        let exact = 0.25 - 0.5 * (n + m) as f64;
        // the discrete eigenvectors fix the relative phase of n and m
        assert!((r.delta_nm.norm() - exact.abs()).abs() < 1e-4, "({n},{m}) {}", r.delta_nm);
    }
}

#[test]
fn hermiticity_defect_vanishes_for_any_vectors() {
    let m = build_rotor_gauge_b(64).unwrap().build(0.3).unwrap();
    let x: Vec<Complex64> = (0..64).map(|k| Complex64::new((0.3 * k as f64).sin(), 0.1)).collect();
    let y: Vec<Complex64> = (0..64).map(|k| Complex64::new(1.0, (k as f64).cos())).collect();
    assert!(hermiticity_defect(&m, &x, &y).norm() < 1e-9 * m.max_abs());
}

#[test]
fn wave_algebra_matches_pointwise_evaluation() {
    let psi = Wave::eigenfunction(Gauge::B, 2, 0.3);
    let d = Wave::eigenfunction_derivative(Gauge::B, 2, 0.3);
    for t in [0.1, 1.0, 4.0] {
        assert!((d.eval(t) + Complex64::i() * t * psi.eval(t)).norm() < 1e-15);
    }
    assert!((psi.inner(&psi) - 1.0).norm() < 1e-13);
    let h = psi.apply_h(Gauge::B, 0.3);
    assert!((h.eval(1.0) - psi.eval(1.0) * rotor_energy(2, 0.3)).norm() < 1e-14);
}

#[test]
fn step_preconditions() {
    let fb = build_rotor_gauge_b(64).unwrap();
    assert!(matches!(check_generalized_hf(&fb, 0.2, 0, 0.0), Err(Error::InvalidStep(_))));
    assert!(matches!(energy_derivative(&fb, 0.2, 0, f64::NAN), Err(Error::InvalidStep(_))));
    assert!(matches!(off_diagonal_form(&fb, 0.2, 0, 0, 1e-5), Err(Error::Precondition(_))));
    assert!(matches!(integrated_form(&fb, 0.2, 0.2, 0), Err(Error::Precondition(_))));
    let _: &dyn OperatorFamily = &fb;
}
