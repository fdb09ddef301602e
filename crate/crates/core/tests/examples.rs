// Every example doubles as a smoke test of its capability.

macro_rules! example_test {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().unwrap_or_else(|e| panic!("{}: {e}", $file));
        }
    };
}

example_test!(rotor_gauges, "rotor_gauges.rs");
example_test!(radial_anomaly, "radial_anomaly.rs");
example_test!(integrated_form, "integrated_form.rs");
example_test!(off_diagonal, "off_diagonal.rs");
example_test!(convergence, "convergence.rs");
example_test!(bessel, "bessel.rs");
example_test!(eigen_tracking, "eigen_tracking.rs");
example_test!(experiment_sweep, "experiment_sweep.rs");
