use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn vknot(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_vknot")).args(args).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    (out.status.code().unwrap(), serde_json::from_str(text.trim()).unwrap_or(Value::Null))
}

fn error_kind(v: &Value) -> &str {
    v["error"]["kind"].as_str().unwrap()
}

#[test]
fn invariants_of_virtual_trefoil() {
    let (code, v) = vknot(&["invariants", "O1+ O2+ U1+ U2+"]);
    assert_eq!(code, 0);
    assert_eq!(v["odd_writhe"], 2);
    assert_eq!(v["j0"], 0);
    assert_eq!(v["n_writhes"]["1"], 1);
    assert_eq!(v["n_writhes"]["-1"], 1);
    assert_eq!(v["affine_index_polynomial"], serde_json::json!([[1, 1], [0, -2], [-1, 1]]));
}

#[test]
fn classify_and_normal_form_agree() {
    let (_, c) = vknot(&["classify", "--k", "3", "O1+ O2+ U1+ U2+ O3+ O4+ U3+ U4+"]);
    assert_eq!(c["a"], 2);
    let (_, n) = vknot(&["normal-form", "--a", "2"]);
    assert_eq!(c["representative"], n["diagram"]);
    let (code, neg) = vknot(&["normal-form", "--a", "-1"]);
    assert_eq!(code, 0);
    assert_eq!(neg["odd_writhe"], -2);
}

#[test]
fn move_and_script_replay() {
    let (code, m) = vknot(&["move", "--apply", "R1+ a=0 s=+ o=I", "O1+ U1+"]);
    assert_eq!(code, 0);
    let d = m["diagram"].as_str().unwrap().to_string();
    let inv = m["inverse"].as_str().unwrap().to_string();
    let (_, back) = vknot(&["move", "--apply", &inv, &d]);
    assert_eq!(back["canonical"], "O1+ U1+");

    let mut path = std::env::temp_dir();
    path.push(format!("vknot-cli-{}.txt", std::process::id()));
    std::fs::write(&path, "# two swaps\nXI 0\nXI 0\n").unwrap();
    let (code, r) = vknot(&["script-replay", "--file", path.to_str().unwrap(), "O1+ O2+ U1+ U2+"]);
    assert_eq!(code, 0);
    assert_eq!(r["moves"], 2);
    assert_eq!(r["diagram"], "O1+ O2+ U1+ U2+");
    std::fs::write(&path, "XI 0\nR2- c=1,2\n").unwrap();
    let (code, r) = vknot(&["script-replay", "--file", path.to_str().unwrap(), "O1+ O2+ U1+ U2+"]);
    assert_eq!(code, 1);
    assert_eq!(error_kind(&r), "script");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn distance_with_certificate() {
    let (code, v) = vknot(&["distance", "--k", "1", "O1+ O2+ U1+ U2+", ""]);
    assert_eq!(code, 0);
    assert_eq!(v["lower"], 1);
    assert_eq!(v["exact"], 1);
    let (_, v) = vknot(&["distance", "--k", "2", "O1+ O2+ U1+ U2+", ""]);
    assert_eq!(v["infeasible"], true);
}

#[test]
fn witness_reaches_its_bound() {
    let (code, v) = vknot(&["witness", "--a", "1", "--k", "1", ""]);
    assert_eq!(code, 0);
    assert_eq!(v["lower_bound"], 1);
    let d = v["diagram"].as_str().unwrap();
    let (_, c) = vknot(&["classify", "--k", "1", d]);
    assert_eq!(c["odd_writhe"], 2);
}

#[test]
fn random_is_deterministic() {
    let (_, a) = vknot(&["random", "--n", "5", "--seed", "11"]);
    let (_, b) = vknot(&["random", "--n", "5", "--seed", "11"]);
    assert_eq!(a, b);
}

#[test]
fn code_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vknot"))
        .args(["invariants", "--code-file", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"O1+ U1+\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["j0"], 1);
}

#[test]
fn error_exit_codes() {
    for (args, kind) in [
        (vec!["invariants", "O1+ X"], "gauss_code"),
        (vec!["invariants", "O1+ O1+"], "gauss_code"),
        (vec!["classify", "--k", "0", "O1+ U1+"], "parameter"),
        (vec!["move", "--apply", "XI 9", "O1+ O2+ U1+ U2+"], "move"),
        (vec!["move", "--apply", "SPIN 2", "O1+ U1+"], "move"),
        (vec!["script-replay", "--file", "/nonexistent/script", "O1+ U1+"], "io"),
        (vec!["frobnicate"], "usage"),
    ] {
        let (code, v) = vknot(&args);
        assert_eq!(code, 1, "{args:?}");
        assert_eq!(error_kind(&v), kind, "{args:?}");
    }
}
