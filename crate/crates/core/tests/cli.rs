//! The `qct` binary end to end.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn qct(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qct")).args(args).env_remove("QCT_FIXTURES").output().expect("qct runs")
}

fn scratch_dir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("qct-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn fixture(path: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(path)
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn fixtures_are_listed() {
    let o = qct(&["fixtures", "list"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "gr25res_products.json"));
}

#[test]
fn diff_of_a_fixture_with_itself_is_empty() {
    let p = fixture("matrices/fl123res_fp1.json");
    let o = qct(&["diff", p.to_str().unwrap(), p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 differing entries"));
}

#[test]
fn diff_lists_a_perturbed_entry() {
    let dir = scratch_dir("diff");
    let src = fixture("matrices/gr24res_m1.json");
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&src).unwrap()).unwrap();
    v["rows"][1][0] = serde_json::Value::String("7".into());
    let changed = dir.join("changed.json");
    std::fs::write(&changed, v.to_string()).unwrap();
    let o = qct(&["diff", changed.to_str().unwrap(), src.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("(2,1): 7 vs"), "{out}");
    assert!(out.contains("1 differing entries"));
}

#[test]
fn diff_shape_mismatch_is_an_error() {
    let a = fixture("matrices/gr24res_m1.json");
    let b = fixture("matrices/gr25_w10.json");
    let o = qct(&["diff", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn flag_run_passes_and_is_deterministic() {
    let dir = scratch_dir("fl");
    let (a, b) = (dir.join("a.json"), dir.join("b.json"));
    for p in [&a, &b] {
        let o = qct(&["run", "fl123", "--format", "json", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["example"], "fl123");
    assert_eq!(v["pass"], true);
}

/// The reference comparison follows the convention stored with the reference; the flag changes
/// the N used everywhere else, which shows in the sign against the rank one model.
#[test]
fn convention_flag_flips_the_residue_sign() {
    let sign = |args: &[&str]| {
        let o = qct(args);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        assert!(out.contains("[pass] N equals the reference matrix (dlog convention)"), "{out}");
        out.lines().find_map(|l| l.trim().strip_prefix("sign of N relative to (w·E)E: ").map(str::to_string)).unwrap()
    };
    assert_eq!(sign(&["run", "fl123"]), "-1");
    assert_eq!(sign(&["run", "fl123", "--convention", "plain"]), "1");
}

#[test]
fn dumped_matrices_diff_clean_against_references() {
    let dir = scratch_dir("dump");
    let o = qct(&["run", "fl123", "--dump-matrices", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = fixture("matrices/fl123_p2.json");
    let o = qct(&["diff", dir.join("fl123_induced_fp2.json").to_str().unwrap(), r.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn grassmannian_24_reports_its_reference_mismatches() {
    let o = qct(&["run", "gr24"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("m2⋆ equals the reference matrix"));
    assert!(err.contains("N equals the reference matrix"));
    assert_eq!(err.lines().filter(|l| l.starts_with("FAIL")).count(), 2, "{err}");
}

#[test]
fn ladder_run_writes_fan_files() {
    let dir = scratch_dir("ladder");
    let out = dir.join("report.txt");
    let o = qct(&["run", "ladder", "5", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&out).unwrap().contains("gr25 resolution fan: identical"));
    assert!(dir.join("ladder_5_2_sing.fan").exists());
    assert_eq!(
        std::fs::read_dir(&dir)
            .unwrap()
            .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "fan"))
            .count(),
        6
    );
}

#[test]
fn fan_command_reads_names_and_paths() {
    let o = qct(&["fan", "gr25_res"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"smooth\": true"));
    let p = fixture("fans/fl123_sing.fan");
    let o = qct(&["fan", p.to_str().unwrap()]);
    assert!(stdout(&o).contains("\"smooth\": false"));
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(qct(&["run", "gr99"]).status.code(), Some(2));
    assert_eq!(qct(&["run", "ladder", "5"]).status.code(), Some(2));
    assert_eq!(qct(&["fan", "nope"]).status.code(), Some(2));
}

#[test]
fn fixture_directory_override() {
    let dir = scratch_dir("env");
    let o =
        Command::new(env!("CARGO_BIN_EXE_qct")).args(["fan", "gr24_res"]).env("QCT_FIXTURES", &dir).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    std::fs::create_dir_all(dir.join("fans")).unwrap();
    std::fs::copy(fixture("fans/gr24_res.fan"), dir.join("fans/gr24_res.fan")).unwrap();
    let o =
        Command::new(env!("CARGO_BIN_EXE_qct")).args(["fan", "gr24_res"]).env("QCT_FIXTURES", &dir).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}
