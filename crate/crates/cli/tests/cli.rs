use serde_json::Value;
use std::process::{Command, Output};

fn qgal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgal")).args(args).env("QGAL_WORKERS", "2").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_reduces_commutator() {
    let o = qgal(&["eval", "--ctx", "Uq(+,-)", "E*F - F*E"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(q/(q^2-1))*K^-2 + (q/(q^2-1))*K^2");
}

#[test]
fn nf_lists_monomials_in_order() {
    let o = qgal(&["nf", "--ctx", "B(+,+;1)", "xs*x"]);
    assert_eq!(stdout(&o), "1\t-q^2\nz\t1\nz^2\t-1\n");
}

#[test]
fn hopf_maps() {
    assert_eq!(stdout(&qgal(&["delta", "--ctx", "Uq(+,-)", "--via", "0", "E"])).trim(), "(K^-1 ⊗ E) + (E ⊗ K)");
    assert_eq!(stdout(&qgal(&["antipode", "--ctx", "Pol(0)", "a0"])).trim(), "a0^-1");
    assert_eq!(stdout(&qgal(&["pair", "--mu", "+", "E", "b"])).trim(), "1");
}

#[test]
fn coaction_on_generator() {
    let o = qgal(&["gamma", "--params", "0,1,3", "x"]);
    assert_eq!(stdout(&o).trim(), "3*(1 ⊗ a0*b0) + (x ⊗ a0^2)");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["eval", "--ctx", "Uq(+,+)", "E*"][..],
        &["eval", "--ctx", "Uq(2,+)", "E"],
        &["verify", "--suite", "nonsense"],
        &["verify", "--grid", "1,2"],
        &["delta", "--ctx", "B(+,+;1)", "x"],
        &["pair", "--mu", "sl2c", "E", "a"],
    ] {
        let o = qgal(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"), "{args:?}");
    }
}

#[test]
fn verify_json_document() {
    let o = qgal(&["verify", "--suite", "coideal", "--grid", "1,0,1;1,1,0", "--format", "json", "--seed", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["tool"], "qgal");
    assert_eq!(doc["suite"], "coideal");
    assert_eq!(doc["seed"], 5);
    assert_eq!(doc["grid_size"], 2);
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(doc["summary"]["total"], entries.len());
    assert_eq!(doc["summary"]["fail"], 0);
    for e in entries {
        assert!(e["id"].as_str().unwrap().starts_with("coideal."));
        assert_eq!(e["status"], "pass");
    }
    let rejected = entries.iter().find(|e| e["id"] == "coideal.decision[1,1;0]").unwrap();
    assert!(rejected["note"].as_str().unwrap().starts_with("no embedding"));
}

#[test]
fn verify_failure_exits_one() {
    let o = qgal(&["verify", "--suite", "pairing", "--format", "text"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("FAIL") && l.contains("pairing.gram_rank[0]")));
}

#[test]
fn verify_json_is_deterministic() {
    let run = || {
        let o = qgal(&["verify", "--suite", "classify", "--format", "json", "--seed", "42"]);
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v["elapsed_ms"] = Value::Null;
        for e in v["entries"].as_array_mut().unwrap() {
            e.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn list_names_suites() {
    let text = stdout(&qgal(&["list"]));
    for s in ["confluence", "weakhopf", "ergodic", "coideal", "all", "Pol(sl2c)"] {
        assert!(text.contains(s), "{s}");
    }
}
