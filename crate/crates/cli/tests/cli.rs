use std::process::{Command, Output};

use cli::{parse_args, run, RunConfig};

fn webcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_webcalc"))
        .args(args)
        .env_remove(cli::CACHE_ENV)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn config(args: &[&str]) -> RunConfig {
    let mut full = vec!["webcalc"];
    full.extend_from_slice(args);
    parse_args(full).expect("parses").config
}

#[test]
fn circle_value() {
    let o = webcalc(&["evaluate", "circle", "--n", "3", "--l", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^-2 + 1 + q^2\n");
}

#[test]
fn bigon_value() {
    let o = webcalc(&["evaluate", "bigon", "--n", "4", "--k", "1", "--l", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^-2 + 1 + q^2\n");
}

#[test]
fn loop_relations() {
    let o = webcalc(&["relations", "--n", "4", "--a", "", "--b", "", "--space", "apr"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(
        lines,
        [
            "(q^-3 + q^-1 + q + q^3)P{0} - P{1}",
            "(-q^-2 - 1 - q^2)P{1} + (q^-1 + q)P{2}",
            "(q^-1 + q)P{2} + (-q^-2 - 1 - q^2)P{3}",
            "-P{3} + (q^-3 + q^-1 + q + q^3)P{4}",
        ]
    );
}

#[test]
fn hexagon_relation_json() {
    let o = webcalc(&["relations", "--json", "--n", "4", "--a", "0,0,0", "--b", "1,1,1", "--space", "apr"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "relations");
    assert_eq!(v["passed"], true);
    let text = webcalc(&["relations", "--n", "4", "--a", "0,0,0", "--b", "1,1,1", "--space", "apr"]);
    assert_eq!(stdout(&text), "-P{1} + P{2} - P{3} + P{4}\n");
}

#[test]
fn inductive_base_case() {
    let o = webcalc(&["verify", "--inductive", "--n", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = webcalc(&["verify", "--inductive", "--n", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failures"], 0);
    assert_eq!(v["passed"], true);
}

#[test]
fn inductive_square() {
    let o = webcalc(&["verify", "--inductive", "--n", "4", "--a", "0,0", "--b", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS SS n=4"), "{out}");
    assert!(out.contains("PASS APR n=4"), "{out}");
}

#[test]
fn dgt_of_a_square() {
    let o = webcalc(&["dgt", "--n", "3", "--a", "0,0", "--b", "1,1", "--family", "P", "--l", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["evaluate", "circle", "--n", "3"],
        &["relations", "--n", "4", "--a", "0,x", "--b", "1,1", "--space", "apr"],
        &["relations", "--n", "4", "--a", "0", "--b", "1,1", "--space", "apr"],
        &["evaluate", "circle", "--n", "3", "--l", "4"],
        &["verify", "--n", "3"],
        &["rep-check", "--suite", "kernel"],
    ] {
        let o = webcalc(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn budget_refusal_exits_3() {
    let o = webcalc(&["rep-check", "--suite", "kernel", "--n", "4", "--max-k", "3", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn failures_exit_1() {
    let o = webcalc(&["identities", "--name", "ssprime-ss", "--max-n", "2", "--max-entry", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL ssprime-ss"));
}

#[test]
fn config_round_trip() {
    let cases: [&[&str]; 5] = [
        &["verify", "--inductive", "--max-n", "4", "--max-k", "2", "--jobs", "2"],
        &["relations", "--n", "5", "--a", "-1,0", "--b", "1,2", "--space", "ss"],
        &["rep-check", "--suite", "square", "--n", "3", "--output", "/tmp/x.json"],
        &["identities", "--name", "vandermonde"],
        &["evaluate", "bigon", "--n", "4", "--k", "1", "--l", "3"],
    ];
    for args in cases {
        let c = config(args);
        let s = serde_json::to_string(&c).unwrap();
        let back: RunConfig = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c, "{args:?}");
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }
}

#[test]
fn dump_and_run_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let o = webcalc(&["evaluate", "circle", "--n", "4", "--l", "2", "--dump-config"]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(&path, &o.stdout).unwrap();
    let o = webcalc(&["run", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^-4 + q^-2 + 2 + q^2 + q^4\n");
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = webcalc(&["rep-check", "--suite", "loops", "--max-n", "3", "--json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["failures"], 0);
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let base = ["rep-check", "--suite", "square", "--max-n", "4", "--max-k", "2", "--json"];
    let mut one = base.to_vec();
    one.extend(["--jobs", "1"]);
    let mut four = base.to_vec();
    four.extend(["--jobs", "4"]);
    let (a, b) = (webcalc(&one), webcalc(&four));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = webcalc(&base);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn cache_hits_return_the_stored_report() {
    let dir = tempfile::tempdir().unwrap();
    let run_cached = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_webcalc"))
            .args(args)
            .env(cli::CACHE_ENV, dir.path())
            .output()
            .unwrap()
    };
    let args = ["rep-check", "--suite", "ih", "--max-n", "3", "--json"];
    let first = run_cached(&args);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = run_cached(&args);
    assert_eq!(first.stdout, second.stdout);
    // a different thread count shares the entry
    let mut jobs = args.to_vec();
    jobs.extend(["--jobs", "2"]);
    run_cached(&jobs);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn library_run_matches_binary() {
    let c = config(&["rep-check", "--suite", "braid", "--max-n", "3", "--json"]);
    let out = run(&c).unwrap();
    assert!(out.passed);
    let o = webcalc(&["rep-check", "--suite", "braid", "--max-n", "3", "--json"]);
    assert_eq!(out.json.as_bytes(), &o.stdout[..]);
}
