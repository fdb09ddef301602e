use std::path::Path;
use std::process::{Command, Output};

fn hfgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hfgen")).args(args).output().expect("spawn hfgen")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path_arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn rotor_b_sweep_passes_and_writes_documented_columns() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rotor.csv");
    let o = hfgen(&["rotor", "--gauge", "b", "--epsilon", "0.25", "--modes", "-2..2", "--grid", "2048", "--fd-step", "1e-5", "--forms", "differential", "--out", path_arg(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("PASS"), "{}", stdout(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# hfgen differential schema v1"));
    assert_eq!(
        lines.next().unwrap(),
        "model,lambda,n,E,dE_dlambda,expectation_formal,delta_matrix,delta_boundary,residual_naive,residual_generalized,grid_size,fd_step"
    );
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_path(&out).unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 5);
    for row in &rows {
        let n: i64 = row[2].parse().unwrap();
        let naive: f64 = row[8].parse().unwrap();
        let gen: f64 = row[9].parse().unwrap();
        assert!((naive - (0.25 - n as f64).abs()).abs() < 1e-4);
        assert!(gen <= 1e-4);
    }
}

#[test]
fn gauge_a_zero_flux_is_trivial() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.csv");
    let o = hfgen(&["rotor", "--gauge", "a", "--epsilon", "0", "--modes", "0", "--grid", "256", "--out", path_arg(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_path(&out).unwrap();
    let row = reader.records().next().unwrap().unwrap();
    assert!(row[4].parse::<f64>().unwrap().abs() < 1e-9);
    assert!(row[6].parse::<f64>().unwrap().abs() < 1e-9);
}

#[test]
fn radial_run_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("radial.csv");
    let o = hfgen(&["radial", "--kappa", "1", "--grid", "4000", "--forms", "differential", "--out", path_arg(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("PASS"));
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_path(&out).unwrap();
    let row = reader.records().next().unwrap().unwrap();
    assert!((row[4].parse::<f64>().unwrap() + 1.0).abs() < 1e-2);
    assert!((row[6].parse::<f64>().unwrap() + 1.0).abs() < 1e-2);
    assert!(row[9].parse::<f64>().unwrap() <= 1e-2);
}

#[test]
fn identical_configs_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let o = hfgen(&["rotor", "--gauge", "b", "--sweep", "0.1:0.4:4", "--modes", "-1..1", "--grid", "256", "--forms", "differential,offdiag,integrated", "--analytic", "--out", path_arg(&out)]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        ["differential", "offdiag", "integrated"].map(|f| {
            std::fs::read(dir.path().join(format!("{}_{f}.csv", name.trim_end_matches(".csv")))).unwrap()
        })
    };
    assert_eq!(run("first.csv"), run("second.csv"));
}

#[test]
fn offdiag_integrated_and_convergence_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let o = hfgen(&["offdiag", "--model", "rotor-b", "--lambda", "0.25", "--pairs", "0:1,0:2,1:2", "--analytic", "--out", path_arg(&dir.path().join("o.csv"))]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("PASS"));
    let o = hfgen(&["integrated", "--model", "rotor-b", "--lambda1", "0.25", "--lambda2", "0.1", "--analytic", "--out", path_arg(&dir.path().join("i.csv"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
    let conv = dir.path().join("c.csv");
    let o = hfgen(&["convergence", "--model", "rotor-b", "--lambda", "0.3", "--modes", "1", "--levels", "3", "--grid", "64", "--out", path_arg(&conv)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
    let text = std::fs::read_to_string(&conv).unwrap();
    assert_eq!(text.lines().count(), 2 + 3);
}

#[test]
fn validation_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let o = path_arg(&out);
    for args in [
        vec!["convergence", "--model", "rotor-b", "--lambda", "0.3", "--levels", "2", "--out", o],
        vec!["rotor", "--gauge", "b", "--epsilon", "0.5", "--modes", "0", "--out", o],
        vec!["rotor", "--gauge", "b", "--grid", "4", "--out", o],
        vec!["rotor", "--gauge", "b", "--fd-step", "1", "--out", o],
        vec!["radial", "--kappa", "-1", "--out", o],
        vec!["rotor", "--gauge", "b", "--sweep", "0.1:0.2", "--out", o],
    ] {
        let r = hfgen(&args);
        assert_eq!(r.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&r.stderr));
    }
}

#[test]
fn numerical_failure_exits_with_3_and_names_the_point() {
    let dir = tempfile::tempdir().unwrap();
    // r_min above the log zero of κ: the closure cannot be built
    let o = hfgen(&["radial", "--kappa", "1", "--r-min", "2", "--grid", "100", "--out", path_arg(&dir.path().join("x.csv"))]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("lambda = 1, n = 0"), "{err}");
}

#[test]
fn config_file_overrides_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("from_config.csv");
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, format!(r#"{{"grid_size": 128, "modes": [1], "output_path": "{}"}}"#, path_arg(&out))).unwrap();
    let o = hfgen(&["rotor", "--gauge", "b", "--epsilon", "0.2", "--grid", "2048", "--out", path_arg(&dir.path().join("ignored.csv")), "--config", path_arg(&cfg)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!dir.path().join("ignored.csv").exists());
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_path(&out).unwrap();
    let row = reader.records().next().unwrap().unwrap();
    assert_eq!(&row[2], "1");
    assert_eq!(&row[10], "128");
    std::fs::write(&cfg, r#"{"bogus": 1}"#).unwrap();
    let o = hfgen(&["rotor", "--gauge", "b", "--config", path_arg(&cfg)]);
    assert_eq!(o.status.code(), Some(2));
}
