use std::io::Write;
use std::process::Command;

use pathfn_cli::run;
use tempfile::NamedTempFile;

const DIAMOND: &str = "g 4 5\nv 0 s\nv 1 a\nv 2 b\nv 3 t\nedge 0 1 1\nedge 0 2 2\nedge 1 2 1\nedge 1 3 1\nedge 2 3 2\n";

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn pathfn(args: &[&str]) -> pathfn_cli::Outcome {
    run(std::iter::once("pathfn").chain(args.iter().copied()))
}

#[test]
fn solve_diamond() {
    let g = file(DIAMOND);
    let path = g.path().to_str().unwrap();
    let out = pathfn(&["solve", "--graph", path, "--source", "0", "--algorithm", "eda", "--function", "classic"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<_> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[0], "0 value=0 path=s=0");
    assert_eq!(lines[1], "1 value=1 path=s=0 -> 1[k0]");
    assert_eq!(lines[2], "2 value=2 path=s=0 -> 2[k2]");
    assert_eq!(lines[3], "3 value=2 path=s=0 -> 1[k0] -> 3[k6]");
    assert!(lines[4].starts_with("# extend_calls="));
}

#[test]
fn verify_anti_risk_against_oracle() {
    let g = file(DIAMOND);
    let path = g.path().to_str().unwrap();
    let out = pathfn(&[
        "verify", "--graph", path, "--source", "0", "--algorithm", "eda", "--function", "antirisk", "--against",
        "oracle",
    ]);
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    assert_eq!(out.stdout.lines().last(), Some("pass"));
}

#[test]
fn missing_probability_is_usage_error() {
    let g = file(DIAMOND);
    let out = pathfn(&["solve", "--graph", g.path().to_str().unwrap(), "--function", "blocked-cost"]);
    assert_eq!(out.code, 1);
    assert_eq!(out.stderr.lines().count(), 1);
}

#[test]
fn precondition_and_parse_errors_exit_one() {
    let g = file(DIAMOND);
    let path = g.path().to_str().unwrap();
    assert_eq!(pathfn(&["solve", "--graph", path, "--source", "9"]).code, 1);
    assert_eq!(pathfn(&["solve", "--graph", path, "--function", "expected-cost", "--p", "0.5"]).code, 1);
    assert_eq!(pathfn(&["solve", "--graph", "/nonexistent/d.g"]).code, 1);
    assert_eq!(pathfn(&["solve", "--graph", path, "--algorithm", "dfs"]).code, 1);
    assert_eq!(pathfn(&["verify", "--graph", path, "--property", "shiny"]).code, 1);
    let bad = file("g 2 1\nv 0\nv 1\narc 0 2 1.0\n");
    let out = pathfn(&["solve", "--graph", bad.path().to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("road endpoint out of range, line 4"), "{}", out.stderr);
    assert_eq!(pathfn(&["--help"]).code, 0);
    assert_eq!(pathfn(&["--version"]).code, 0);
}

#[test]
fn forced_run_is_allowed() {
    let g = file(DIAMOND);
    let path = g.path().to_str().unwrap();
    let args = ["solve", "--graph", path, "--function", "expected-cost", "--p", "0.5"];
    let mut forced = args.to_vec();
    forced.push("--force");
    assert_eq!(pathfn(&forced).code, 0);
}

#[test]
fn property_violation_exits_two() {
    // zero-weight roads leave classic distance unchanged, which INSP forbids
    let g = file("g 3 2\nv 0\nv 1\nv 2\narc 0 1 0\narc 1 2 0\n");
    let out = pathfn(&["verify", "--graph", g.path().to_str().unwrap(), "--property", "INSP"]);
    assert_eq!(out.code, 2, "{}", out.stdout);
    assert_eq!(out.stdout.lines().last(), Some("fail"));
    assert!(out.stdout.contains("property=INSP verdict=violated"));
}

#[test]
fn negative_circle_exits_three() {
    let g = file("g 3 3\nv 0\nv 1\nv 2\narc 0 1 1\narc 1 2 -2\narc 2 1 1\n");
    let out = pathfn(&["solve", "--graph", g.path().to_str().unwrap(), "--algorithm", "embfa", "--system", "all"]);
    assert_eq!(out.code, 3, "{}", out.stderr);
}

#[test]
fn identical_runs_are_byte_identical() {
    let gen = pathfn(&["gen", "--n", "7", "--m", "15", "--seed", "4", "--mode", "undirected"]);
    assert_eq!(gen.code, 0);
    assert_eq!(gen, pathfn(&["gen", "--n", "7", "--m", "15", "--seed", "4", "--mode", "undirected"]));
    let g = file(&gen.stdout);
    let path = g.path().to_str().unwrap();
    for cmd in [
        vec!["solve", "--graph", path, "--function", "antirisk"],
        vec!["solve", "--graph", path, "--algorithm", "embfa", "--function", "expected-cost", "--p", "0.3"],
        vec!["oracle", "--graph", path, "--function", "blocked-cost", "--p", "0.3"],
    ] {
        let a = pathfn(&cmd);
        assert_eq!(a.code, 0, "{}", a.stderr);
        assert_eq!(a, pathfn(&cmd));
    }
}

#[test]
fn bench_reports_each_instance() {
    let out = pathfn(&["bench", "--n", "10,12", "--seed", "3..5"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<_> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("n=10 m=30 seed=3 "));
    assert!(lines[3].starts_with("n=12 m=36 seed=4 "));
    assert!(lines.iter().all(|l| l.contains("ratio=") && l.contains("time_us=")));
}

#[test]
fn binary_exit_codes() {
    let g = file(DIAMOND);
    let bin = env!("CARGO_BIN_EXE_pathfn");
    let status = Command::new(bin)
        .args(["solve", "--graph", g.path().to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&status.stdout).starts_with("0 value=0"));
    let status = Command::new(bin).args(["solve"]).output().unwrap();
    assert_eq!(status.status.code(), Some(1));
}
