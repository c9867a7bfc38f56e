//! End-to-end checks of the binary: exit codes, output schema stability,
//! flag overrides, and byte determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TABLE_RUN: &str = r#"{
    "potential": {"V0": 2.2, "q": 1, "a": 1.425, "R0": 14.25},
    "symmetry": {"kind": "spin", "A": -5, "mass": 15},
    "quantum": {"n_max": 2, "kappa_list": [-1]}
}"#;

fn write_file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wsdirac"))
        .args(args)
        .env("WSDIRAC_LOG", "error")
        .output()
        .unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn cfg_path(dir: &TempDir) -> String {
    write_file(dir, "run.json", TABLE_RUN).display().to_string()
}

#[test]
fn spectrum_header_is_stable() {
    let dir = TempDir::new().unwrap();
    let text = run_ok(&["spectrum", "--config", &cfg_path(&dir)]);
    assert_eq!(
        text.lines().next().unwrap(),
        "n,kappa,omega,E1,E2,eps1,eps2,eps_positive1,eps_positive2,\
         presquare1,presquare2,window1,window2,physical,status"
    );
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn swave_table_header_is_stable() {
    let dir = TempDir::new().unwrap();
    let text = run_ok(&["swave-table", "--config", &cfg_path(&dir)]);
    assert_eq!(
        text.lines().next().unwrap(),
        "n,E1_q1,E2_q1,E1_q2,E2_q2,E1_qm1,E2_qm1,E1_qm2,E2_qm2"
    );
    // 6-decimal presentation in every energy cell.
    for line in text.lines().skip(1) {
        for cell in line.split(',').skip(1) {
            let (_, frac) = cell.split_once('.').expect(cell);
            assert_eq!(frac.len(), 6, "{cell}");
        }
    }
}

#[test]
fn verify_header_is_stable() {
    let dir = TempDir::new().unwrap();
    let cfg = write_file(
        &dir,
        "run.json",
        r#"{
            "potential": {"V0": 2.2, "q": -2, "a": 1.425, "R0": 14.25},
            "symmetry": {"kind": "spin", "A": -5, "mass": 15},
            "quantum": {"n_max": 0, "kappa_list": [-1]}
        }"#,
    );
    let text = run_ok(&["verify", "--config", &cfg.display().to_string()]);
    assert_eq!(
        text.lines().next().unwrap(),
        "n,kappa,omega,r_min,r_max,E_closed,E_oracle,abs_diff,rel_diff,\
         nodes,node_match,mismatch,bracket_fraction,status"
    );
    assert!(text.lines().nth(1).unwrap().ends_with(",ok"), "{text}");
}

#[test]
fn wavefunction_and_pekeris_headers_are_stable() {
    let dir = TempDir::new().unwrap();
    let cfg = write_file(
        &dir,
        "run.json",
        &TABLE_RUN.replace(
            "\"quantum\"",
            "\"wavefunction\": {\"n\": 0, \"kappa\": -1, \"points\": 3}, \"quantum\"",
        ),
    );
    let p = cfg.display().to_string();
    let wf = run_ok(&["wavefunction", "--config", &p]);
    assert_eq!(wf.lines().next().unwrap(), "r,F,G");
    assert_eq!(wf.lines().count(), 4);
    let pk = run_ok(&["pekeris", "--config", &p]);
    assert_eq!(pk.lines().next().unwrap(), "quantity,paper,taylor");
}

#[test]
fn validation_failures_exit_2_with_pointer_messages() {
    let dir = TempDir::new().unwrap();
    let cfg = write_file(&dir, "bad.json", &TABLE_RUN.replace("\"q\": 1", "\"q\": 0"));
    let out = run(&["spectrum", "--config", &cfg.display().to_string()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("/potential/q:"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_json_exits_2() {
    let dir = TempDir::new().unwrap();
    let cfg = write_file(&dir, "broken.json", "{\"potential\":");
    let out = run(&["spectrum", "--config", &cfg.display().to_string()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed JSON"));
}

#[test]
fn unknown_keys_exit_2() {
    let dir = TempDir::new().unwrap();
    let cfg = write_file(
        &dir,
        "typo.json",
        &TABLE_RUN.replace("\"V0\": 2.2,", "\"V0\": 2.2, \"depht\": 3,"),
    );
    let out = run(&["spectrum", "--config", &cfg.display().to_string()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown field `depht`"));
}

#[test]
fn missing_wavefunction_block_exits_2() {
    let dir = TempDir::new().unwrap();
    let out = run(&["wavefunction", "--config", &cfg_path(&dir)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/wavefunction:"));
}

#[test]
fn numerical_failures_exit_3() {
    let dir = TempDir::new().unwrap();
    // Near-zero depth cannot bind the requested excited state: the closed
    // form has no real roots, which is a runtime (not config) failure.
    let cfg = write_file(
        &dir,
        "thin.json",
        r#"{
            "potential": {"V0": 1e-8, "q": 1, "a": 0.0666, "R0": 0.666},
            "symmetry": {"kind": "spin", "A": 0, "mass": 15},
            "quantum": {"n_max": 1, "kappa_list": [-1]},
            "wavefunction": {"n": 1, "kappa": -1, "points": 3}
        }"#,
    );
    let out = run(&["wavefunction", "--config", &cfg.display().to_string()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn out_flag_writes_the_artifact_file() {
    let dir = TempDir::new().unwrap();
    let target = dir.path().join("spec.csv");
    let stdout = run_ok(&[
        "spectrum",
        "--config",
        &cfg_path(&dir),
        "--out",
        &target.display().to_string(),
    ]);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert!(written.starts_with("n,kappa,omega,"), "{written}");
}

#[test]
fn format_flag_switches_to_json() {
    let dir = TempDir::new().unwrap();
    let text = run_ok(&["spectrum", "--config", &cfg_path(&dir), "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
    assert_eq!(rows[0]["n"], 0);
    assert_eq!(rows[0]["kappa"], -1);
}

#[test]
fn pekeris_flag_switches_the_coefficient_source() {
    let dir = TempDir::new().unwrap();
    // kappa = 1 has omega = 2, so the coefficient set enters the energies.
    let cfg = write_file(&dir, "run.json", &TABLE_RUN.replace("[-1]", "[1]"));
    let p = cfg.display().to_string();
    let taylor = run_ok(&["spectrum", "--config", &p, "--pekeris", "taylor"]);
    let out = run(&["spectrum", "--config", &p, "--pekeris", "paper"]);
    // The fixed set blows up at this alpha (imaginary shape exponent);
    // rows are annotated rather than dropped.
    assert!(out.status.success());
    let paper = String::from_utf8(out.stdout).unwrap();
    assert_ne!(taylor, paper);
    assert!(paper.contains("imaginary centrifugal exponent"), "{paper}");
    assert!(taylor.lines().nth(1).unwrap().ends_with(",ok"), "{taylor}");
}

#[test]
fn artifacts_are_byte_deterministic() {
    let dir = TempDir::new().unwrap();
    let p = cfg_path(&dir);
    for (cmd, extra) in [
        ("spectrum", &[][..]),
        ("swave-table", &[]),
        ("pekeris", &[]),
        ("spectrum", &["--format", "json"]),
    ] {
        let mut args = vec![cmd, "--config", p.as_str()];
        args.extend_from_slice(extra);
        let first = run_ok(&args);
        let second = run_ok(&args);
        assert_eq!(first, second, "{cmd} {extra:?}");
    }
}

#[test]
fn config_file_round_trips_through_serialization() {
    let dir = TempDir::new().unwrap();
    let original = Path::new(&cfg_path(&dir)).to_path_buf();
    let cfg = wsdirac_cli::config::load_config(&original).unwrap();
    let reserialized = write_file(&dir, "resaved.json", &serde_json::to_string(&cfg).unwrap());
    let cfg_back = wsdirac_cli::config::load_config(&reserialized).unwrap();
    assert_eq!(cfg_back, cfg);
    // Both documents drive the binary to identical artifacts.
    let a = run_ok(&["spectrum", "--config", &original.display().to_string()]);
    let b = run_ok(&["spectrum", "--config", &reserialized.display().to_string()]);
    assert_eq!(a, b);
}
