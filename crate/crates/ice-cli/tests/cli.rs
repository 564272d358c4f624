use std::process::{Command, Output};

fn ice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ice"))
        .args(args)
        .env_remove("ICE_JOBS")
        .output()
        .expect("run ice")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn partition_rank_one() {
    let o = ice(&["partition", "--r", "1", "--n", "3", "--lambda", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "z1^-1 + g2*z1");
}

#[test]
fn even_cover_is_a_config_error() {
    let o = ice(&["partition", "--n", "4", "--lambda", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n must be odd"));
    assert_eq!(ice(&["relation", "--check", "nope"]).status.code(), Some(2));
    assert_eq!(ice(&["partition", "--variant", "modified"]).status.code(), Some(2));
    assert_eq!(ice(&["partition", "--r", "2", "--lambda", "0,1"]).status.code(), Some(2));
}

#[test]
fn ybe_summary() {
    let o = ice(&["ybe", "--ice", "dd", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("cases: "), "{out}");
    assert!(out.trim_end().ends_with("failures: 0"), "{out}");

    let o = ice(&["ybe", "--ice", "gd", "--n", "3", "--variant", "modified", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(j["cases"].as_u64().unwrap() > 0);
}

#[test]
fn json_is_deterministic() {
    let args = ["ybe", "--ice", "gg", "--n", "3", "--json", "--seed", "7"];
    let a = ice(&args);
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ice"));
    let b = cmd.args(args).env("ICE_JOBS", "1").output().unwrap();
    assert_eq!(a.stdout, b.stdout);

    let args = ["partition", "--r", "2", "--n", "3", "--lambda", "1,0", "--by-residue", "--json"];
    assert_eq!(ice(&args).stdout, ice(&args).stdout);
}

#[test]
fn patterns_and_dirichlet() {
    let o = ice(&["patterns", "--top", "5,3,2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["count"].as_u64().unwrap() as usize, j["patterns"].as_array().unwrap().len());

    let o = ice(&["dirichlet", "--r", "1", "--n", "3", "--lambda", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!j["coefficients"].as_array().unwrap().is_empty());
}

#[test]
fn relations_pass() {
    for check in ["caduceus", "fish-dg", "fish-gg", "fish-gd", "tau"] {
        let o = ice(&["relation", "--check", check, "--n", "3", "--json"]);
        assert_eq!(o.status.code(), Some(0), "{check}");
        let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(j["passed"], serde_json::Value::Bool(true), "{check}: {j}");
    }
    for check in ["transposition", "inverse", "rowchange"] {
        let o = ice(&["relation", "--check", check, "--n", "3", "--r", "2", "--lambda", "1,0"]);
        assert_eq!(o.status.code(), Some(0), "{check}");
        assert!(stdout(&o).contains("failures: 0"));
    }
}

#[test]
fn tables_and_states() {
    let o = ice(&["tables", "--table", "r", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("# r\n"));
    assert_eq!(ice(&["tables", "--table", "nope"]).status.code(), Some(2));

    let o = ice(&["states", "--r", "1", "--n", "3", "--lambda", "0", "--json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["count"], 2);
}
