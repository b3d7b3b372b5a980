use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn path(rel: &str) -> String {
    corpus().join(rel).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qdl"))
        .args(args)
        .env_remove("QDL_CAP")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    (
        serde_json::from_slice(&out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn classify_reports_the_witness() {
    let (v, code) = json(&["tnorm", "classify", "--spec", &path("tnorms/lhalf.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verdict"], "fails");
    assert_eq!(v["result"]["witness"]["x"], "3/4");
    assert_eq!(v["result"]["witness"]["y"], "1/2");
    assert_eq!(v["command"][0], "tnorm");
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn counterexample_lists_three_gaps() {
    let (v, code) = json(&[
        "interval",
        "counterexample",
        "--spec",
        &path("tnorms/lhalf.json"),
    ]);
    assert_eq!(code, 1);
    let gaps = v["result"]["gaps"].as_array().unwrap();
    let pairs: Vec<(&str, &str)> = gaps
        .iter()
        .map(|g| (g["x"].as_str().unwrap(), g["gap"].as_str().unwrap()))
        .collect();
    assert_eq!(pairs, [("5/8", "3/8"), ("3/4", "1/4"), ("7/8", "1/8")]);

    let (v, code) = json(&[
        "interval",
        "counterexample",
        "--spec",
        &path("tnorms/mix_lp.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["gaps"], Value::Array(vec![]));
}

#[test]
fn oracle_check_on_m3() {
    let (v, code) = json(&[
        "check",
        "cd",
        "--cat",
        &path("qcats/m3_bool.json"),
        "--oracle",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["verdict"], false);
    assert_eq!(v["result"]["method"], "both_agree");
    assert_eq!(v["result"]["witness"]["kind"], "meet_not_preserved");

    let (v, code) = json(&["check", "cd", "--cat", &path("qcats/chain3_bool.json")]);
    assert_eq!(
        (code, &v["result"]["method"]),
        (0, &Value::from("criteria"))
    );
}

#[test]
fn precondition_failures_exit_2() {
    let (v, code) = json(&[
        "check",
        "continuous",
        "--cat",
        &path("qcats/full2_bool.json"),
    ]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "not_separated");
    let (v, code) = json(&[
        "check",
        "lambda-gamma",
        "--cat",
        &path("qcats/antichain2_bool.json"),
    ]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "not_complete");
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["corpus", corpus().to_str().unwrap()],
        vec!["qcat", "presheaf", "--cat", &path("qcats/dl_luk3.json")],
        vec![
            "interval",
            "counterexample",
            "--spec",
            &path("tnorms/mix_three.json"),
            "--samples",
            "5",
        ],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn shipped_corpus_passes() {
    let (v, code) = json(&["corpus", corpus().to_str().unwrap()]);
    assert_eq!(code, 0, "{}", v["result"]["mismatches"]);
    assert!(v["result"]["summary"]
        .as_str()
        .unwrap()
        .ends_with(", 0 mismatches"));
    assert!(v["result"]["cases"].as_u64().unwrap() >= 30);
}

#[test]
fn empty_corpus_is_an_empty_pass() {
    let dir = tempfile::tempdir().unwrap();
    let (v, code) = json(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["summary"], "0 cases, 0 checks, 0 mismatches");
}

fn copy_dir(from: &Path, to: &Path) {
    fs::create_dir_all(to).unwrap();
    for entry in fs::read_dir(from).unwrap() {
        let p = entry.unwrap().path();
        let dest = to.join(p.file_name().unwrap());
        if p.is_dir() {
            copy_dir(&p, &dest);
        } else {
            fs::copy(&p, &dest).unwrap();
        }
    }
}

#[test]
fn flipped_expectation_is_one_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    copy_dir(&corpus(), dir.path());
    let manifest = dir.path().join("manifest.json");
    let mut m: Value = serde_json::from_str(&fs::read_to_string(&manifest).unwrap()).unwrap();
    let case = m["cases"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|c| c["name"] == "qcat/m3_bool")
        .unwrap();
    case["expect"]["cd"] = Value::Bool(true);
    fs::write(&manifest, serde_json::to_string(&m).unwrap()).unwrap();

    let (v, code) = json(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    let mismatches = v["result"]["mismatches"].as_array().unwrap();
    assert_eq!(mismatches.len(), 1);
    assert_eq!(mismatches[0]["case"], "qcat/m3_bool");
    assert_eq!(mismatches[0]["check"], "cd");
}

#[test]
fn malformed_input_names_the_offending_path() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"components": [{"lo": "1/2", "hi": "x", "kind": "lukasiewicz"}]}"#,
    )
    .unwrap();
    let out = run(&["tnorm", "classify", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .contains("components[0].hi"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("components[0].hi"));

    fs::write(&bad, r#"{"cases": [{"name": "x", "kind": "tnorm", "file": "a.json", "expect": {"verdit": "fails"}}]}"#)
        .unwrap();
    let (v, code) = json(&["corpus", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(v["error"]["message"].as_str().unwrap().contains("cases[0]"));
}

#[test]
fn cap_comes_from_env_or_flag() {
    let cat = path("qcats/chain2_bool.json");
    let out = Command::new(env!("CARGO_BIN_EXE_qdl"))
        .args(["qcat", "presheaf", "--cat", &cat])
        .env("QDL_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "cap_exceeded");

    let (_, code) = json(&["--cap", "2", "qcat", "presheaf", "--cat", &cat]);
    assert_eq!(code, 2);
    let (v, code) = json(&["qcat", "presheaf", "--cat", &cat]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["objects"].as_array().unwrap().len(), 3);
}

#[test]
fn plain_output_is_flat() {
    let out = run(&[
        "--plain",
        "interval",
        "check",
        "--spec",
        &path("tnorms/lhalf.json"),
        "--c",
        "1/2",
        "--x",
        "3/4",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result.gap = 1/4\n"));
    assert!(text.contains("exit_code = 1\n"));
}

#[test]
fn quantale_commands() {
    let (v, code) = json(&[
        "quantale",
        "residuum",
        "--file",
        &path("quantales/luk4.json"),
        "--p",
        "2/3",
        "--r",
        "1/3",
    ]);
    assert_eq!((code, &v["result"]["value"]), (0, &Value::from("2/3")));

    let (v, code) = json(&[
        "quantale",
        "validate",
        "--file",
        &path("quantales/nonintegral3.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["integral"], false);

    let (v, code) = json(&[
        "quantale",
        "from-tnorm",
        "--spec",
        &path("tnorms/lhalf.json"),
        "--points",
        "0,3/4,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"]["elements"],
        serde_json::json!(["0", "1/2", "3/4", "1"])
    );
}
