use std::process::Command;

use serde_json::Value;

fn pq(args: &[&str], cache: &std::path::Path) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pq"))
        .args(args)
        .env("PQ_CACHE_DIR", cache)
        .output()
        .unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn verify_euler_alt6() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = pq(&["verify", "euler", "--group", "Alt(6)", "--p", "3"], dir.path());
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["result"]["computed"]["chi"], 9);
    assert_eq!(v["verdict"], "pass");
    for key in ["tool_version", "config", "result", "timing_ms", "verdict"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_solomon_tits_and_field_case() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = pq(&["verify", "solomon-tits", "--group", "PSL(3,2)", "--p", "2"], dir.path());
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!((v["result"]["computed"]["degree"].clone(), v["result"]["computed"]["rank"].clone()), (1.into(), 8.into()));
    let (code, out) = pq(&["verify", "field-case", "--group", "PSigmaL(2,4)", "--p", "2"], dir.path());
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["result"]["computed"]["dimension"], 1);
    assert_eq!(v["result"]["computed"]["top_rank"], 16);
}

#[test]
fn output_is_byte_identical_without_timing() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "bouc-euler", "--group", "Sym(6)", "--p", "2", "--no-timing"];
    let (_, a) = pq(&args, dir.path());
    let (_, b) = pq(&args, dir.path());
    assert_eq!(a, b);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = pq(&["verify", "euler", "--group", "Sym(", "--p", "2"], dir.path());
    assert_eq!(code, 2);
    assert_eq!(json(&out)["verdict"], "error");
    let (code, _) = pq(&["verify", "euler", "--group", "Sym(6)", "--p", "4"], dir.path());
    assert_eq!(code, 2);
    let (code, out) = pq(&["poset", "--group", "Sym(6)", "--p", "2", "--element-cap", "100"], dir.path());
    assert_eq!(code, 2);
    assert!(json(&out)["error"].as_str().unwrap().contains("cap"));
    let (code, _) = pq(&["verify", "no-such-verifier", "--group", "Sym(6)"], dir.path());
    assert_eq!(code, 2);
    let (code, _) = pq(&["verify", "euler", "--p", "2"], dir.path());
    assert_eq!(code, 2);
}

#[test]
fn list_has_goldens_and_refusal() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = pq(&["list"], dir.path());
    assert_eq!(code, 0);
    let v = json(&out);
    let cat = v["result"]["catalog"].as_array().unwrap();
    let has = |spec: &str, value: i64| {
        cat.iter().any(|e| e["spec"] == spec && e["golden"].as_array().unwrap().iter().any(|g| g["value"] == value))
    };
    assert!(has("Sym(6)", -16));
    assert!(has("PGL(2,9)", -160));
    assert!(cat.iter().any(|e| e["spec"] == "2F4(2)" && e["refusal"].is_string()));
}

#[test]
fn cache_dir_flag_and_env() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let (code, _) = pq(&["homology", "--group", "Sym(4)", "--p", "2"], env_dir.path());
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_dir(env_dir.path()).unwrap().count(), 1);
    let flag = flag_dir.path().to_str().unwrap();
    let (code, _) = pq(&["homology", "--group", "Sym(4)", "--p", "3", "--cache-dir", flag], env_dir.path());
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_dir(flag_dir.path()).unwrap().count(), 1);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, stdout) = pq(&["group", "--group", "Sym(5)", "--out", path.to_str().unwrap()], dir.path());
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v = json(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(v["result"]["order"], 120);
}

#[test]
fn suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out) = pq(&["suite", "--no-timing"], dir.path());
    assert_eq!(code, 0, "{out}");
    let v = json(&out);
    assert!(v["result"]["reports"].as_array().unwrap().iter().all(|r| r["verdict"] != "fail"));
}
