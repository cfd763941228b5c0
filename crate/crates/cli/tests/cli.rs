//! End-to-end contract tests for the `twisted-lab` binary: exit codes,
//! report shapes and byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_twisted-lab"));
    cmd.env_remove("TWISTED_LAB_BUDGET");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn suite_passes_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("suite1.json");
    let out2 = dir.path().join("suite2.json");
    let r1 = run(&[
        "suite",
        "--seed",
        "1",
        "--budget",
        "4194304",
        "--out",
        out1.to_str().unwrap(),
    ]);
    assert_eq!(
        r1.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&r1.stderr)
    );
    let text = stdout(&r1);
    assert!(
        text.lines().all(|l| l.starts_with("PASS")),
        "suite output:\n{text}"
    );
    // the manifest names every module invariant
    for name in [
        "parseval",
        "kp_sharp_unimodular",
        "lem_riesz_a_ddagger",
        "eq_gthanlogn_witness",
        "lem_dae_localization",
        "prop_copies_bound",
        "block_delta_growth",
    ] {
        assert!(text.contains(name), "missing check {name}");
    }
    let r2 = run(&[
        "suite",
        "--seed",
        "1",
        "--budget",
        "4194304",
        "--out",
        out2.to_str().unwrap(),
    ]);
    assert_eq!(r2.status.code(), Some(0));
    let j1 = std::fs::read(&out1).unwrap();
    let j2 = std::fs::read(&out2).unwrap();
    assert_eq!(
        j1, j2,
        "identical config and seed must reproduce the report byte for byte"
    );

    let parsed: serde_json::Value = serde_json::from_slice(&j1).unwrap();
    assert_eq!(parsed["all_pass"], serde_json::Value::Bool(true));
    assert!(parsed["checks"].as_array().unwrap().len() >= 30);
}

#[test]
fn witness_csv_shape_and_flags() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("witness.csv");
    let r = run(&[
        "witness",
        "--n",
        "1..20",
        "--phi",
        "id",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(
        r.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&r.stderr)
    );
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "N,linf_norm,l2_norm,mho_l1,bound_b1,bound_b2,pass_b1,pass_b2,seconds"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 20);
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells.len(), 9);
        assert_eq!(cells[6], "true");
        assert_eq!(cells[7], "true");
    }
}

#[test]
fn witness_values_are_deterministic_modulo_timing() {
    let a = run(&["witness", "--n", "1..6"]);
    let b = run(&["witness", "--n", "1..6"]);
    let strip = |out: &Output| -> Vec<String> {
        stdout(out)
            .lines()
            .map(|l| {
                l.rsplit_once(',')
                    .map(|(head, _)| head.to_owned())
                    .unwrap_or_default()
            })
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn walk_row_matches_the_exact_value() {
    let r = run(&["cantor", "walk", "--n", "4"]);
    assert_eq!(r.status.code(), Some(0));
    let text = stdout(&r);
    let row = text.lines().nth(1).unwrap();
    assert!(row.starts_with("4,1.5,"), "row was {row:?}");
}

#[test]
fn unknown_command_and_bad_flags_exit_one() {
    let r = run(&["frobnicate"]);
    assert_eq!(r.status.code(), Some(1));
    let r = run(&["witness", "--phi", "cosh"]);
    assert_eq!(r.status.code(), Some(1));
    let r = run(&["witness", "--n", "5..2"]);
    assert_eq!(r.status.code(), Some(1));
}

#[test]
fn budget_violations_exit_one() {
    let r = run(&["witness", "--n", "30"]);
    assert_eq!(r.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&r.stderr).contains("budget"));

    // the environment variable lowers the cap
    let r = bin()
        .args(["witness", "--n", "11"])
        .env("TWISTED_LAB_BUDGET", "1024")
        .output()
        .unwrap();
    assert_eq!(r.status.code(), Some(1));

    // and the flag takes precedence over a permissive environment
    let r = bin()
        .args(["witness", "--n", "7", "--budget", "64"])
        .env("TWISTED_LAB_BUDGET", "1048576")
        .output()
        .unwrap();
    assert_eq!(r.status.code(), Some(1));
}

#[test]
fn transform_check_reports_three_groups() {
    let r = run(&["transform-check", "--trials", "5"]);
    assert_eq!(r.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&r)).unwrap();
    assert_eq!(doc["pass"], serde_json::Value::Bool(true));
    assert_eq!(doc["groups"].as_array().unwrap().len(), 3);
}

#[test]
fn twisted_subcommands_round_trip_json_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| -> String {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_owned()
    };
    // on Delta_1: g = 0, f = 1 + r_1 (values 2, 0)
    let g_path = write(
        "g.json",
        r#"{"orders":[2],"side":"group","values":[[0.0,0.0],[0.0,0.0]]}"#,
    );
    let f_path = write(
        "f.json",
        r#"{"orders":[2],"side":"group","values":[[2.0,0.0],[0.0,0.0]]}"#,
    );
    // quasinorm with phi = id, p = inf, q = 1: ||g - mho f||_1 + ||f||_inf
    let r = run(&["twisted", "quasinorm", "--g", &g_path, "--f", &f_path]);
    assert_eq!(r.status.code(), Some(0));
    let value: f64 = stdout(&r).trim().parse().unwrap();
    // mho(1 + r_1) = (log(2)/2)(1 + r_1), so ||0 - mho f||_1 = log(2)/2, plus ||f||_inf = 2
    let want = std::f64::consts::LN_2 / 2.0 + 2.0;
    assert!((value - want).abs() < 1e-10, "got {value}, want {want}");

    // act by a = delta at identity scaled by group size: a*h = h
    let a_path = write(
        "a.json",
        r#"{"orders":[2],"side":"group","values":[[2.0,0.0],[0.0,0.0]]}"#,
    );
    let og = dir.path().join("out_g.json");
    let of = dir.path().join("out_f.json");
    let r = run(&[
        "twisted",
        "act",
        "--a",
        &a_path,
        "--g",
        &f_path,
        "--f",
        &f_path,
        "--out-g",
        og.to_str().unwrap(),
        "--out-f",
        of.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(0));
    let moved: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&of).unwrap()).unwrap();
    // (2 delta_e) * f picks up the defining convolution normalization:
    // ahat = (1,1), fhat = (1,1) -> product (1,1) -> back to f itself
    assert_eq!(moved["side"], "group");
    let v = moved["values"].as_array().unwrap();
    assert!((v[0][0].as_f64().unwrap() - 2.0).abs() < 1e-10);

    // delta over an explicit witness
    let w_path = write(
        "w.json",
        r#"{"orders":[2],"side":"group","values":[[1.0,1.0],[1.0,-1.0]]}"#,
    );
    let r = run(&["twisted", "delta", "--witness", &w_path]);
    assert_eq!(r.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&r)).unwrap();
    assert_eq!(doc["witness_count"], 1);
    let want = 0.25 * std::f64::consts::LN_2;
    assert!((doc["delta_lower"].as_f64().unwrap() - want).abs() < 1e-10);
}

#[test]
fn defects_command_emits_the_documented_json() {
    let r = run(&[
        "defects", "--phi", "id", "--trials", "300", "--n", "5", "--seed", "3",
    ]);
    assert_eq!(
        r.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&r.stderr)
    );
    let doc: serde_json::Value = serde_json::from_str(&stdout(&r)).unwrap();
    let reports = doc.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for rep in reports {
        for key in ["map", "trials", "max_defect", "bound", "pass"] {
            assert!(rep.get(key).is_some(), "missing key {key}");
        }
        assert_eq!(rep["pass"], serde_json::Value::Bool(true));
    }
}

#[test]
fn delta_command_certifies_the_desk_scale_floor() {
    let r = run(&["delta", "--n", "1..12", "--phi", "id"]);
    assert_eq!(r.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&r)).unwrap();
    assert!(doc["delta_lower"].as_f64().unwrap() > 0.3);
    assert_eq!(doc["witness_count"], 12);
}

#[test]
fn blocks_csv_has_the_documented_columns() {
    let r = run(&["blocks"]);
    assert_eq!(r.status.code(), Some(0));
    let text = stdout(&r);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "k,c_k,n_k,delta_lower_k,q_sampled");
    assert_eq!(lines.count(), 8);
}

#[test]
fn plot_data_projects_reports() {
    let dir = tempfile::tempdir().unwrap();
    let witness_json = dir.path().join("witness.json");
    let r = run(&[
        "witness",
        "--n",
        "1..4",
        "--format",
        "json",
        "--out",
        witness_json.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(0));
    let plots = dir.path().join("plots");
    let r = run(&[
        "plot-data",
        "--kind",
        "witness",
        "--report",
        witness_json.to_str().unwrap(),
        "--out-dir",
        plots.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(0));
    for name in [
        "witness_computed.csv",
        "witness_bound_b1.csv",
        "witness_bound_b2.csv",
    ] {
        let table = std::fs::read_to_string(plots.join(name)).unwrap();
        assert_eq!(
            table.lines().count(),
            5,
            "{name} should carry header + 4 rows"
        );
        for line in table.lines().skip(1) {
            assert_eq!(line.split(',').count(), 2);
        }
    }

    let walk_json = dir.path().join("walk.json");
    let r = run(&[
        "cantor",
        "walk",
        "--n",
        "2,4,64",
        "--format",
        "json",
        "--out",
        walk_json.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(0));
    let r = run(&[
        "plot-data",
        "--kind",
        "walk",
        "--report",
        walk_json.to_str().unwrap(),
        "--out-dir",
        plots.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(0));
    assert!(plots.join("walk_ratio.csv").exists());

    // an empty report is a usage error
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, r#"{"rows": []}"#).unwrap();
    let r = run(&[
        "plot-data",
        "--kind",
        "walk",
        "--report",
        empty.to_str().unwrap(),
        "--out-dir",
        plots.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(1));
}

#[test]
fn copies_command_emits_per_sample_defects() {
    let r = run(&[
        "cantor",
        "copies",
        "--n",
        "6",
        "--a",
        "1,3",
        "--eps",
        "+,-",
        "--phi",
        "id",
        "--samples",
        "25",
        "--seed",
        "7",
    ]);
    assert_eq!(r.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&r)).unwrap();
    assert_eq!(doc["pass"], serde_json::Value::Bool(true));
    assert_eq!(doc["defects"].as_array().unwrap().len(), 25);
}

#[test]
fn help_is_not_an_error() {
    let r = run(&["--help"]);
    assert_eq!(r.status.code(), Some(0));
    assert!(stdout(&r).contains("witness"));
}

#[test]
fn reports_can_be_written_under_new_directories() {
    let dir = tempfile::tempdir().unwrap();
    let nested = dir.path().join("a/b/witness.csv");
    let r = run(&["witness", "--n", "1..2", "--out", nested.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    assert!(Path::new(&nested).exists());
}
