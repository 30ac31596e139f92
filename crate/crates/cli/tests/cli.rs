use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn pbwcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbwcheck")).args(args).output().expect("spawn pbwcheck")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn sl2_is_pbw() {
    let out = pbwcheck(&["pbw-check", &path("sl2.def")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["pbw"]["verdict"], "yes");
    assert_eq!(v["pbw"]["unanimous"], true);
    assert_eq!(v["pbw"]["complexity"], 2);
}

#[test]
fn perturbed_sl2_exits_one() {
    let out = pbwcheck(&["pbw-check", &path("sl2_perturbed.def")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["pbw"]["verdict"], "no");
    let out = pbwcheck(&["regularity", &path("sl2_perturbed.def")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["regularity"]["witness"]["element"], "h");
}

#[test]
fn jacobi_witnesses_for_the_lowered_cubics() {
    let out = pbwcheck(&["pbw-check", &path("cubic_pair.def"), "--method", "jacobi"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let fails = v["pbw"]["jacobi"]["failures"].as_array().unwrap();
    assert_eq!(fails[0]["k"], 3);
    assert_eq!(fails[0]["witness"], "y*w - w*y");
    assert_eq!(fails[1]["k"], 4);
    assert_eq!(fails[1]["witness"], "x^2*w - w*y^2");
    assert!(v["pbw"].get("oracle").is_none());
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["pbw-check", "sl2.def"],
        vec!["resolution", "y2_xyz.alg"],
        vec!["complexity", "persistent_ext3.alg"],
        vec!["central-ext", "weyl.def", "--text"],
    ] {
        let mut a: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        a[1] = path(args[1]);
        let a: Vec<&str> = a.iter().map(String::as_str).collect();
        let first = pbwcheck(&a);
        let second = pbwcheck(&a);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}

#[test]
fn central_name_collision_is_an_error() {
    let out = pbwcheck(&["central-ext", &path("persistent_ext3.alg"), "--central", "z"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("collides"));
    // the file itself asks for `t`
    let out = pbwcheck(&["central-ext", &path("persistent_ext3.alg"), "--max-deg", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["central_extension"]["central"], "t");
}

#[test]
fn max_deg_flag_beats_file_option() {
    let out = pbwcheck(&["hilbert", &path("sl2.def"), "--max-deg", "3"]);
    let v = json(&out);
    assert_eq!(v["max_deg"], 3);
    assert_eq!(v["hilbert"], serde_json::json!([1, 3, 6, 10]));
}

#[test]
fn exported_extension_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let export = dir.path().join("d.alg");
    let report = dir.path().join("r.json");
    let out = pbwcheck(&[
        "central-ext",
        &path("sl2.def"),
        "--max-deg",
        "5",
        "--export",
        export.to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let rep: serde_json::Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    let dims = rep["central_extension"]["dims"].clone();
    let out = pbwcheck(&["hilbert", export.to_str().unwrap(), "--max-deg", "5"]);
    assert_eq!(json(&out)["hilbert"], dims);
}

#[test]
fn errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.alg");
    std::fs::write(&bad, "gens x y\nrel x*y - q\n").unwrap();
    let out = pbwcheck(&["hilbert", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2, column 11"), "{err}");

    let out = pbwcheck(&["hilbert", dir.path().join("missing.alg").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // degrees past the window cannot be checked
    let out = pbwcheck(&["regularity", &path("sl2.def"), "--max-deg", "4", "--degree", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn prime_field_files_run_over_that_prime() {
    let out = pbwcheck(&["hilbert", &path("monomial_xy_yz.alg"), "--max-deg", "4"]);
    let v = json(&out);
    assert_eq!(v["field"], "GF 101");
    assert_eq!(v["hilbert"], serde_json::json!([1, 3, 7, 16, 37]));
}

#[test]
fn timings_only_on_request() {
    let out = pbwcheck(&["pbw-check", &path("weyl.def")]);
    assert!(json(&out)["pbw"].get("timings_ms").is_none());
    let out = pbwcheck(&["pbw-check", &path("weyl.def"), "--timings"]);
    assert!(json(&out)["pbw"]["timings_ms"].is_object());
}
