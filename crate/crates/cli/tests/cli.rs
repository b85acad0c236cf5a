use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_pairdom");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn corpus(n: usize) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join(format!("../core/data/cubic_n{n:02}.g6"))
        .to_string_lossy()
        .into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn solve_named_and_g6() {
    for (args, value) in [
        (&["solve", "--name", "petersen", "--json"][..], 6),
        (&["solve", "--name", "k4", "--json"][..], 2),
        (&["solve", "--g6", "C~", "--json"][..], 2),
    ] {
        let o = run(args);
        assert!(o.status.success());
        assert_eq!(json(&o)["gamma_pr"], value);
    }
}

#[test]
fn solve_is_deterministic() {
    let a = run(&["solve", "--name", "cube"]);
    let b = run(&["solve", "--name", "cube"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("gamma_pr=4"));
}

#[test]
fn solve_error_exit_codes() {
    assert_eq!(run(&["solve", "--g6", "A`"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--name", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["solve"]).status.code(), Some(2));
    let isolated = run(&["solve", "--g6", "B?"]);
    assert_eq!(isolated.status.code(), Some(3));
    assert!(isolated.stdout.is_empty());
    assert!(!isolated.stderr.is_empty());
}

#[test]
fn solve_reads_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.g6");
    std::fs::write(&path, "\nC~\n").unwrap();
    let o = run(&["solve", "--file", path.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    assert!(json(&o)["id"].as_str().unwrap().ends_with("g.g6:2"));
}

#[test]
fn certify_k4_prism_petersen() {
    let k4 = run(&["certify", "--name", "k4"]);
    assert_eq!(k4.status.code(), Some(0));
    let v = json(&k4);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["slack"], 2);
    assert_eq!(v["components"][0]["total"], "24/12");
    assert_eq!(v["components"][0]["pairs"], 1);

    let prism = run(&["certify", "--name", "prism"]);
    assert_eq!(prism.status.code(), Some(0));
    assert_eq!(json(&prism)["gamma_pr"], 2);

    let p = run(&["certify", "--name", "petersen"]);
    assert_eq!(p.status.code(), Some(4));
    let v = json(&p);
    assert_eq!(v["verdict"], false);
    assert!(v["failing_component"].is_number());
}

#[test]
fn certify_rejects_non_cubic() {
    let o = run(&["certify", "--name", "cycle6"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(o.stdout.is_empty());
}

#[test]
fn verify_suite_and_given_sets() {
    assert!(run(&["verify", "--name", "petersen"]).status.success());
    let ok = run(&["verify", "--name", "k4", "--pds", "0-1", "--json"]);
    assert!(ok.status.success());
    assert_eq!(json(&ok)["checks"][0]["ok"], true);
    assert_eq!(
        run(&["verify", "--name", "cycle6", "--pds", "0-1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["verify", "--name", "k4", "--pds", "0:1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn scan_n10_flags_only_petersen() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let o = run(&[
        "scan",
        "--file",
        &corpus(10),
        "--out",
        csv.to_str().unwrap(),
        "--jobs",
        "2",
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("id,n,gamma_pr,bound_ok,is_petersen,cert_ok,ms")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 19);
    let violations: Vec<_> = rows.iter().filter(|r| r[3] == "false").collect();
    assert_eq!(violations.len(), 1);
    assert_eq!(violations[0][4], "true");
    assert!(stdout(&o).contains("bound_violations: 1 (petersen: 1, other: 0)"));
}

#[test]
fn scan_n4_has_no_violations() {
    let o = run(&["scan", "--file", &corpus(4), "--json", "--no-timing"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "id,n,gamma_pr,bound_ok,is_petersen,cert_ok,ms\n".to_string()
            + &format!("{}:1,4,2,true,false,true,0\n", corpus(4))
    );
    let summary: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(summary["bound_violations"], 0);
}

#[test]
fn scan_is_deterministic_across_job_counts() {
    let file = corpus(12);
    let one = run(&["scan", "--file", &file, "--jobs", "1", "--no-timing"]);
    let eight = run(&["scan", "--file", &file, "--jobs", "8", "--no-timing"]);
    assert!(one.status.success() && eight.status.success());
    assert_eq!(one.stdout, eight.stdout);
    assert_eq!(stdout(&one).lines().count(), 86);
}

#[test]
fn scan_keeps_going_after_bad_lines() {
    let o = run_with_stdin(&["scan", "--no-timing"], b"C~\nnot graph6\n\nA_\n");
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[1], "stdin:1,4,2,true,false,true,0");
    assert_eq!(lines[2], "stdin:2,,,,,,");
    assert_eq!(lines[3], "stdin:4,2,2,false,false,,0");
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("stdin:2:"));
    assert!(err.contains("errors: 1"));
}

#[test]
fn generate_k4_copies() {
    let o = run(&["generate", "--n", "4", "--count", "3", "--seed", "99"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "C~\nC~\nC~\n");
}

#[test]
fn generate_is_reproducible() {
    let args = ["generate", "--n", "10", "--count", "100", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 100);
    for line in text.lines() {
        let g = pairdom_core::parse_graph6(line).unwrap();
        assert!(g.n() == 10 && g.is_cubic() && g.is_connected());
    }
    assert_ne!(
        run(&["generate", "--n", "10", "--count", "100", "--seed", "8"]).stdout,
        a.stdout
    );
}

#[test]
fn generate_pipes_into_scan() {
    let gen = run(&["generate", "--n", "12", "--count", "50", "--seed", "1"]);
    assert!(gen.status.success());
    let o = run_with_stdin(&["scan", "--no-timing", "--json"], &gen.stdout);
    assert!(o.status.success());
    let summary: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(summary["graphs"], 50);
    assert_eq!(summary["bound_violations"], 0);
    assert_eq!(summary["uncertified"], 0);
}

#[test]
fn generate_rejects_odd_order() {
    assert_eq!(run(&["generate", "--n", "9"]).status.code(), Some(2));
}
