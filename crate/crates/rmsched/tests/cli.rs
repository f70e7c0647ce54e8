//! End-to-end tests of the `rmsched` binary: every subcommand, the exit-code
//! contract, and byte-for-byte determinism of generated files and reports.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rmsched"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin().args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn gen_writes_identical_bytes_for_identical_seeds() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "gen", "--family", "random", "--seed", "42", "--n", "6", "--q", "4", "--weights", "1,9",
        "--reqs", "1,6", "--times", "0,12", "--out", "a.json",
    ];
    let first = run(&args, dir.path());
    assert!(first.status.success(), "{}", stderr_of(&first));
    let mut again = args;
    again[again.len() - 1] = "b.json";
    let second = run(&again, dir.path());
    assert!(second.status.success());
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    let b = std::fs::read(dir.path().join("b.json")).unwrap();
    assert_eq!(a, b, "same seed, same bytes");
    assert!(std::str::from_utf8(&a).unwrap().contains("\"jobs\""));
}

#[test]
fn gen_three_part_writes_sidecar_with_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(
        &[
            "gen", "--family", "3part", "--B", "12", "--xs", "4,4,4,4,4,4", "--certify", "--out",
            "hard.json",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("threshold 24 met"), "stdout: {text}");
    let sidecar = std::fs::read_to_string(dir.path().join("hard.json.labels.json")).unwrap();
    assert!(sidecar.contains("\"threshold\": 24"));
    assert!(sidecar.contains("\"threshold_met\": true"));
    assert!(sidecar.contains("\"normal\""));
    assert!(sidecar.contains("\"large\""));
    let no = run(
        &[
            "gen", "--family", "3part", "--B", "16", "--xs", "5,5,5,5,5,7", "--certify", "--out",
            "no.json",
        ],
        dir.path(),
    );
    assert!(no.status.success());
    assert!(stdout_of(&no).contains("no partition"));
    let sidecar = std::fs::read_to_string(dir.path().join("no.json.labels.json")).unwrap();
    assert!(!sidecar.contains("certificate"));
}

#[test]
fn solve_reports_the_known_tight_ratio() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        &["gen", "--family", "spt-tight", "--k1", "2", "--k2", "2", "--out", "t.json"],
        dir.path(),
    );
    assert!(gen.status.success(), "{}", stderr_of(&gen));
    let solve = run(&["solve", "--algo", "spt", "--input", "t.json", "--oracle"], dir.path());
    assert!(solve.status.success());
    let text = stdout_of(&solve);
    assert!(text.contains("objective: 19"), "stdout: {text}");
    assert!(text.contains("oracle: 14 (ratio 1.357143)"), "stdout: {text}");
}

#[test]
fn solve_accepts_quantity_only_files_for_the_robust_algorithm() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        &["gen", "--family", "adversarial", "--n", "3", "--m", "2", "--out", "adv.json"],
        dir.path(),
    );
    assert!(gen.status.success(), "{}", stderr_of(&gen));
    let solve = run(
        &["solve", "--algo", "robust", "--eps", "1/4", "--input", "adv.json", "--oracle"],
        dir.path(),
    );
    assert!(solve.status.success(), "{}", stderr_of(&solve));
    let text = stdout_of(&solve);
    assert!(text.contains("max ratio: 2.000000"), "stdout: {text}");
    let spt = run(&["solve", "--algo", "spt", "--input", "adv.json"], dir.path());
    assert_eq!(spt.status.code(), Some(1), "only robust may take quantity-only input");
    assert!(stderr_of(&spt).contains("no arrival times"));
}

#[test]
fn bench_and_report_round_trip_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let config = r#"{
  "instances": [
    {"kind": "random", "id": "a", "seed": 11, "n": 5, "q": 3, "zero_p": true,
     "weights": [1, 1], "reqs": [1, 1]},
    {"kind": "random", "id": "b", "seed": 12, "n": 5, "q": 3, "zero_p": true,
     "weights": [1, 1], "reqs": [1, 1]}
  ],
  "algorithms": [
    {"algo": "spt"},
    {"algo": "greedy"},
    {"algo": "shift-cover", "eps": "1/4"},
    {"algo": "exact-dp"}
  ],
  "output": "suite.csv"
}"#;
    std::fs::write(dir.path().join("suite.json"), config).unwrap();
    let first = run(&["bench", "--config", "suite.json"], dir.path());
    assert!(first.status.success(), "{}", stderr_of(&first));
    assert!(stdout_of(&first).contains("wrote 8 rows"));
    let bytes = std::fs::read(dir.path().join("suite.csv")).unwrap();
    let second = run(&["bench", "--config", "suite.json"], dir.path());
    assert!(second.status.success());
    assert_eq!(bytes, std::fs::read(dir.path().join("suite.csv")).unwrap(), "reruns repeat bytes");
    let text = String::from_utf8(bytes).unwrap();
    assert!(text.starts_with("instance_id,algo,params,"));
    assert!(text.lines().all(|l| !l.contains("false")));
    let report = run(&["report", "--input", "suite.csv"], dir.path());
    assert!(report.status.success(), "{}", stderr_of(&report));
    let summary = stdout_of(&report);
    assert!(summary.contains("total: rows 8, infeasible 0"), "summary: {summary}");
    assert!(summary.contains("exact-dp -: rows 2, infeasible 0, max ratio 1.000000 (1)"));
}

#[test]
fn report_rejects_a_tampered_ratio_column() {
    let dir = tempfile::tempdir().unwrap();
    let csv = "instance_id,algo,params,objective_num,objective_den,oracle_num,oracle_den,ratio,feasible,runtime_ms\n\
               x,spt,-,3,1,2,1,1.600000,true,0\n";
    std::fs::write(dir.path().join("bad.csv"), csv).unwrap();
    let out = run(&["report", "--input", "bad.csv"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("disagrees with the recomputed"));
}

#[test]
fn exit_codes_follow_the_contract() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        &["gen", "--family", "random", "--seed", "7", "--n", "5", "--q", "3", "--zero-p", "--out",
          "r.json"],
        dir.path(),
    );
    assert!(gen.status.success());

    // 0: a clean solve.
    let ok = run(&["solve", "--algo", "greedy", "--input", "r.json"], dir.path());
    assert_eq!(ok.status.code(), Some(0));

    // 1: usage errors, from clap and from validation.
    let usage = run(&["solve", "--algo", "nonsense", "--input", "r.json"], dir.path());
    assert_eq!(usage.status.code(), Some(1));
    let missing = run(&["solve", "--algo", "ptas-q", "--input", "r.json"], dir.path());
    assert_eq!(missing.status.code(), Some(1));
    assert!(stderr_of(&missing).contains("k"));
    let zero_eps =
        run(&["solve", "--algo", "shift-cover", "--eps", "0", "--input", "r.json"], dir.path());
    assert_eq!(zero_eps.status.code(), Some(1));

    // 1: malformed input file.
    std::fs::write(dir.path().join("broken.json"), "{\"jobs\": [}").unwrap();
    let parse = run(&["solve", "--algo", "spt", "--input", "broken.json"], dir.path());
    assert_eq!(parse.status.code(), Some(1));
    assert!(stderr_of(&parse).contains("parse error"));

    // 3: oracle cap exceeded, via the environment override.
    let capped = bin()
        .args(["solve", "--algo", "exact-dp", "--input", "r.json"])
        .env("RMSCHED_ORACLE_CAP", "2")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3), "{}", stderr_of(&capped));
    assert!(stderr_of(&capped).contains("cap"));

    // 3: enumeration budget exceeded, via the environment override.
    let tiny_budget = bin()
        .args(["solve", "--algo", "ptas", "--eps", "1/4", "--input", "r.json"])
        .env("RMSCHED_BUDGET", "1")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(tiny_budget.status.code(), Some(3), "{}", stderr_of(&tiny_budget));

    // --help and --version succeed.
    let help = run(&["--help"], dir.path());
    assert_eq!(help.status.code(), Some(0));
    let version = run(&["--version"], dir.path());
    assert_eq!(version.status.code(), Some(0));
}

#[test]
fn env_overrides_are_honored() {
    let dir = tempfile::tempdir().unwrap();
    let gen = run(
        &["gen", "--family", "random", "--seed", "9", "--n", "6", "--q", "3", "--zero-p", "--out",
          "r.json"],
        dir.path(),
    );
    assert!(gen.status.success());
    // A generous cap leaves the exact solver working.
    let fine = bin()
        .args(["solve", "--algo", "exact-dp", "--input", "r.json"])
        .env("RMSCHED_ORACLE_CAP", "12")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(fine.status.code(), Some(0), "{}", stderr_of(&fine));
    // A malformed value is a usage error, not a silent fallback.
    let bad = bin()
        .args(["solve", "--algo", "exact-dp", "--input", "r.json"])
        .env("RMSCHED_ORACLE_CAP", "many")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1), "{}", stderr_of(&bad));
}
