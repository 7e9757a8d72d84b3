//! End-to-end runs of the `tricat` binary.

use std::path::{Path, PathBuf};
use std::process::Command;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn tricat(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_tricat")).args(args).output().expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

fn emit(dir: &Path, name: &str, params: &[&str]) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let mut args = vec!["zoo", name];
    args.extend(params);
    args.extend(["--emit", path.to_str().unwrap()]);
    let r = tricat(&args);
    assert_eq!(r.code, 0, "{}", r.stderr);
    path
}

#[test]
fn full_report_on_truncated_square() {
    let dir = tempfile::tempdir().unwrap();
    let spec = emit(dir.path(), "truncated-square", &["2"]);
    let r = tricat(&["report", spec.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("1 + t^-1"), "{}", r.stdout);
    assert!(r.stdout.contains("KL parity holds to depth 6"), "{}", r.stdout);
    assert!(!r.stdout.contains("violations:"));
}

#[test]
fn json_output_parses() {
    let dir = tempfile::tempdir().unwrap();
    let spec = emit(dir.path(), "restricted-sl2", &["3"]);
    let r = tricat(&["matrices", spec.to_str().unwrap(), "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["header"]["dim"], 27);
    assert!(v["matrices"]["ok"]["relation"]["product_holds"].as_bool().unwrap());
}

#[test]
fn pathological_has_no_tilting_objects() {
    let dir = tempfile::tempdir().unwrap();
    let spec = emit(dir.path(), "pathological", &[]);
    let path = spec.to_str().unwrap();
    let r = tricat(&["tilting", path]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("not self-injective; no tilting objects"), "{}", r.stdout);
    assert_eq!(tricat(&["tilting", path, "--strict"]).code, 1);
    let v = tricat(&["verify", path]);
    assert_eq!(v.code, 0);
    assert!(v.stdout.contains("ambidextrous: false"));
}

#[test]
fn kl_failure_is_a_note_unless_strict() {
    let dir = tempfile::tempdir().unwrap();
    let spec = emit(dir.path(), "truncated-square", &["3"]);
    let path = spec.to_str().unwrap();
    let r = tricat(&["kl", path]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("KL fails at depth 2"), "{}", r.stdout);
    assert_eq!(tricat(&["kl", path, "--strict"]).code, 1);
}

#[test]
fn broken_triangular_data_is_a_violation() {
    let dir = tempfile::tempdir().unwrap();
    let spec = emit(dir.path(), "truncated-square", &["2"]);
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&spec).unwrap()).unwrap();
    v["triangular"]["plus"] = serde_json::json!([0, 2]);
    std::fs::write(&spec, v.to_string()).unwrap();
    let r = tricat(&["verify", spec.to_str().unwrap()]);
    assert_eq!(r.code, 1, "{}", r.stdout);
    assert!(r.stdout.contains("FAIL"));
}

#[test]
fn malformed_specs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let spec = emit(dir.path(), "pathological", &[]);
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&spec).unwrap()).unwrap();
    v.as_object_mut().unwrap().remove("unit");
    let no_unit = dir.path().join("no-unit.json");
    std::fs::write(&no_unit, v.to_string()).unwrap();
    let r = tricat(&["verify", no_unit.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("unit"), "{}", r.stderr);

    let truncated = dir.path().join("truncated.json");
    std::fs::write(&truncated, "{\"schema\": 1,\n").unwrap();
    let r = tricat(&["report", truncated.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);

    assert_eq!(tricat(&["report", dir.path().join("missing.json").to_str().unwrap()]).code, 2);
    assert_eq!(tricat(&["zoo", "no-such-algebra"]).code, 2);
    assert_eq!(tricat(&["zoo", "restricted-sl2", "4"]).code, 2);
}

#[test]
fn cache_replays_identical_output() {
    let dir = tempfile::tempdir().unwrap();
    let spec = emit(dir.path(), "truncated-square", &["3"]);
    let cache = dir.path().join("cache");
    let args = ["report", spec.to_str().unwrap(), "--cache-dir", cache.to_str().unwrap()];
    let first = tricat(&args);
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 1);
    let second = tricat(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.code, second.code);
    let other_seed = tricat(&[&args[..], &["--seed", "5"]].concat());
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 2);
    assert_eq!(other_seed.code, first.code);
}

#[test]
fn jobs_do_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let spec = emit(dir.path(), "restricted-sl2", &["3"]);
    let path = spec.to_str().unwrap();
    let a = tricat(&["report", path, "--format", "json"]);
    let b = tricat(&["report", path, "--format", "json", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
}
