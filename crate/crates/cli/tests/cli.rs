use std::path::Path;
use std::process::{Command, Output};

const BETTI_32: &str = include_str!("golden/betti_3_2.txt");

/// Runs the binary with its cache redirected into `home`.
fn run_in(home: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyck-syzygy"))
        .args(args)
        .env_remove("DYCK_SYZYGY_CACHE")
        .env("XDG_CACHE_HOME", home)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    let home = tempfile::tempdir().unwrap();
    run_in(home.path(), args)
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn betti_matches_reference_table() {
    let out = run(&["betti", "(3,2)", "--m", "3", "--n", "3"]);
    assert_eq!(stdout(&out), BETTI_32);
}

#[test]
fn kac_lists_nineteen_factors() {
    let text = stdout(&run(&["kac", "(4,3,1,1)", "--n", "4"]));
    assert!(text.starts_with("K_(4,3,1,1) for n = 4: 19 composition factors\n"));
    assert_eq!(text.lines().count(), 20);
    assert!(!text.contains("note:"));

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["kac", "(4,3,1,1)", "--n", "4", "--format", "json"]))).unwrap();
    assert_eq!(json["family"]["members"].as_array().unwrap().len(), 19);
    assert_eq!(json["size_bound"], 16);
}

#[test]
fn kac_one_row() {
    let text = stdout(&run(&["kac", "(1)", "--n", "1"]));
    assert_eq!(
        text,
        "K_(1) for n = 1: 2 composition factors\n  (1)  d=0  empty\n  (2)  d=1  paths [[(2,1)]]\n"
    );
}

#[test]
fn syzygy_single_strand() {
    let text = stdout(&run(&["syzygy", "(3,2)", "--m", "3", "--n", "3", "--b", "2"]));
    assert!(text.contains("strand b=2 (homological degree 7):"));
    assert!(text.contains("(5,5,5)  d=8"));
    assert!(text.contains("HS = t^15"));
    assert!(!text.contains("strand b=0"));

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["syzygy", "(3,2)", "--m", "3", "--n", "3", "--format", "json"]))).unwrap();
    let strands = json["strands"].as_object().unwrap();
    let counts: Vec<usize> = strands.values().map(|v| v.as_array().unwrap().len()).collect();
    assert_eq!(counts, [2, 2, 1]);
}

#[test]
fn general_ideal_terms() {
    let text = stdout(&run(&["general", "(2)", "(1,1)"]));
    assert_eq!(text, "+ (2)  {1}\n+ (1,1)  {2}\n- (2,1)  {1,2}\n");
    let out = run(&["general", "(2)", "(1)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("comparable"));
}

#[test]
fn rejects_bad_input() {
    let out = run(&["betti", "(1)", "--m", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["kac", "(1,1,1)", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["kac", "(1)", "--n", "1", "--format", "svg"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!run(&["kac", "(1,2)", "--n", "2"]).status.success());
}

#[test]
fn render_writes_one_file_per_pattern() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("svg");
    let text = stdout(&run(&["render", "(3,2)", "--n", "3", "-o", out_dir.to_str().unwrap()]));
    assert_eq!(text.lines().count(), 5);
    let mut names: Vec<String> = std::fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["3-2_01_b0.svg", "3-2_02_b0.svg", "3-2_03_b1.svg", "3-2_04_b1.svg", "3-2_05_b2.svg"]);
    let top = std::fs::read_to_string(out_dir.join("3-2_05_b2.svg")).unwrap();
    assert!(top.starts_with("<svg"));
    assert_eq!(top.matches("class=\"bullet\"").count(), 2);
    assert_eq!(top.matches("class=\"path\"").count(), 2);

    let only = dir.path().join("b1");
    stdout(&run(&["render", "(3,2)", "--n", "3", "--b", "1", "--format", "svg", "-o", only.to_str().unwrap()]));
    assert_eq!(std::fs::read_dir(&only).unwrap().count(), 2);

    let kac = dir.path().join("kac");
    stdout(&run(&["render", "(4,3,1,1)", "--n", "4", "--family", "kac", "-o", kac.to_str().unwrap()]));
    assert_eq!(std::fs::read_dir(&kac).unwrap().count(), 19);
}

#[test]
fn check_reports_tap() {
    let text = stdout(&run(&["check", "--all"]));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("TAP version 13"));
    let plan = lines.next().unwrap();
    let total: usize = plan.strip_prefix("1..").unwrap().parse().unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("ok ")).count(), total);
    assert!(!text.contains("not ok"));
    assert!(text.ends_with("# fail 0\n"));

    let cube = stdout(&run(&["check", "cube", "--format", "json"]));
    let cases: serde_json::Value = serde_json::from_str(&cube).unwrap();
    assert!(cases.as_array().unwrap().iter().all(|c| c["ok"] == true));
}

#[test]
fn betti_json_round_trips() {
    let text = stdout(&run(&["betti", "(3,2)", "--m", "3", "--n", "3", "--format", "json"]));
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["lambda"], serde_json::json!([3, 2]));
    assert_eq!(json["rows"]["5"]["0"], 225);
    assert_eq!(json["rows"]["7"]["8"], 1);
    let again = serde_json::to_string_pretty(&json).unwrap();
    assert_eq!(again.trim_end(), text.trim_end());
}

#[test]
fn cache_and_threads_do_not_change_output() {
    let home = tempfile::tempdir().unwrap();
    let cache = home.path().join("series.jsonl");
    let args = ["betti", "(2,1)", "--m", "3", "--n", "3"];
    let plain = stdout(&run_in(home.path(), &[&args[..], &["--no-cache"]].concat()));
    let cold = stdout(&run_in(home.path(), &[&args[..], &["--cache", cache.to_str().unwrap()]].concat()));
    assert!(std::fs::read_to_string(&cache).unwrap().starts_with("dyck-syzygy series cache v1\n"));
    let warm = stdout(&run_in(home.path(), &[&args[..], &["--cache", cache.to_str().unwrap()]].concat()));
    let one_job = stdout(&run_in(home.path(), &[&args[..], &["--jobs", "1", "--no-cache"]].concat()));
    assert_eq!(cold, plain);
    assert_eq!(warm, plain);
    assert_eq!(one_job, plain);

    let via_env = Command::new(env!("CARGO_BIN_EXE_dyck-syzygy"))
        .args(args)
        .env("DYCK_SYZYGY_CACHE", home.path().join("env.jsonl"))
        .output()
        .unwrap();
    assert_eq!(stdout(&via_env), plain);
    assert!(home.path().join("env.jsonl").exists());
}

#[test]
fn default_cache_lives_under_xdg_cache_home() {
    let home = tempfile::tempdir().unwrap();
    stdout(&run_in(home.path(), &["betti", "(1)", "--m", "2", "--n", "2"]));
    assert!(home.path().join("dyck-syzygy/series.jsonl").exists());
}
