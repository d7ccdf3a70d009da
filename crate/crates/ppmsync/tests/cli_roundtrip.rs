//! End-to-end tests of the compiled binary: artifact roundtrips through
//! real files, exit-code contract, environment variables, and output
//! determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ppmsync"));
    // Tests control these explicitly where they matter.
    cmd.env_remove("PPMSYNC_WORKLIMIT").env_remove("PPMSYNC_THREADS");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stderr).expect("stderr is UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Per-test scratch directory under the system temp dir.
struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("ppmsync_cli_{tag}_{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }

    fn write_stdout(&self, name: &str, out: &Output) -> PathBuf {
        assert_eq!(code(out), 0, "stderr: {}", stderr_of(out));
        let p = self.path(name);
        std::fs::write(&p, &out.stdout).unwrap();
        p
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_verify_roundtrip() {
    let dir = Scratch::new("construct_verify");
    let out = run(&["construct-dss", "--thm", "index2", "--n", "26", "--format", "json"]);
    let file = dir.write_stdout("z26.json", &out);
    assert!(stdout_of(&out).contains("\"index\": 2"), "{}", stdout_of(&out));

    let ok = run(&["verify-dss", "--input", path_str(&file), "--expect-index", "2"]);
    assert_eq!(code(&ok), 0, "stderr: {}", stderr_of(&ok));

    let too_high = run(&["verify-dss", "--input", path_str(&file), "--expect-index", "3"]);
    assert_eq!(code(&too_high), 1);

    let missing = run(&["verify-dss", "--input", path_str(&dir.path("nope.json"))]);
    assert_eq!(code(&missing), 2);
}

#[test]
fn combine_certify_and_work_limit() {
    let dir = Scratch::new("combine_certify");
    let marker = dir.write_stdout(
        "z8.json",
        &run(&["construct-dss", "--thm", "index1", "--n", "8", "--format", "json"]),
    );
    let bundle = dir.path("bundle.json");
    let combined = run(&[
        "combine",
        "--marker",
        path_str(&marker),
        "--ppm",
        "--output",
        path_str(&bundle),
    ]);
    assert_eq!(code(&combined), 0, "stderr: {}", stderr_of(&combined));

    // Certifies at index 1: passes the default threshold, fails 2.
    let pass = run(&["certify", "--bundle", path_str(&bundle)]);
    assert_eq!(code(&pass), 0, "stderr: {}", stderr_of(&pass));
    let fail = run(&["certify", "--bundle", path_str(&bundle), "--threshold", "2"]);
    assert_eq!(code(&fail), 1);

    // A tiny work limit leaves the bundle uncertified (exit 1), whether it
    // comes from the flag or the environment; the flag overrides the env.
    let starved = run(&["certify", "--bundle", path_str(&bundle), "--work-limit", "3"]);
    assert_eq!(code(&starved), 1);
    assert!(
        stdout_of(&starved).contains("uncertified") || stderr_of(&starved).contains("uncertified")
    );
    let starved_env = bin()
        .env("PPMSYNC_WORKLIMIT", "3")
        .args(["certify", "--bundle", path_str(&bundle)])
        .output()
        .unwrap();
    assert_eq!(code(&starved_env), 1);
    let flag_wins = bin()
        .env("PPMSYNC_WORKLIMIT", "3")
        .args(["certify", "--bundle", path_str(&bundle), "--work-limit", "1000000"])
        .output()
        .unwrap();
    assert_eq!(code(&flag_wins), 0, "stderr: {}", stderr_of(&flag_wins));

    let bad_env = bin()
        .env("PPMSYNC_WORKLIMIT", "lots")
        .args(["certify", "--bundle", path_str(&bundle)])
        .output()
        .unwrap();
    assert_eq!(code(&bad_env), 2);
}

#[test]
fn ooc_expand_certify_negative_control() {
    let dir = Scratch::new("ooc_expand");
    let ooc = dir.write_stdout(
        "ooc831.json",
        &run(&[
            "build-ooc", "--v", "8", "--k", "3", "--lambda", "1", "--codeword", "0,1,3",
            "--format", "json",
        ]),
    );
    let book = dir.path("book.txt");
    let expanded = run(&["expand", "--input", path_str(&ooc), "--output", path_str(&book)]);
    assert_eq!(code(&expanded), 0, "stderr: {}", stderr_of(&expanded));

    // The raw orbit book is not comma-free: certification comes back 0,
    // below any positive threshold.
    let certify = run(&["certify", "--book", path_str(&book)]);
    assert_eq!(code(&certify), 1);

    // Rejecting a bad design is a verification failure, not a usage error.
    let bad = run(&[
        "build-ooc", "--v", "8", "--k", "3", "--lambda", "1", "--codeword", "0,1,3",
        "--codeword", "0,1,5",
    ]);
    assert_eq!(code(&bad), 1);

    // A tampered book header is an input error.
    let text = std::fs::read_to_string(&book).unwrap();
    let tampered = dir.path("tampered.txt");
    std::fs::write(&tampered, text.replacen("8 3 8", "8 3 9", 1)).unwrap();
    let reject = run(&["certify", "--book", path_str(&tampered)]);
    assert_eq!(code(&reject), 2);
}

#[test]
fn table_checks_against_golden() {
    for which in ["table1", "table3"] {
        let out = run(&["table", which]);
        assert_eq!(code(&out), 0, "{which} stderr: {}", stderr_of(&out));
        let first = stdout_of(&out).lines().next().unwrap();
        assert!(first.contains(','), "{which} emits CSV, got {first:?}");
    }
    let unknown = run(&["table", "table9"]);
    assert_eq!(code(&unknown), 2);
}

#[test]
fn simulate_is_deterministic() {
    let args = [
        "simulate", "--scheme", "geppm", "--symbols", "16", "--gamma-db", "8,10", "--trials",
        "2000", "--seed", "7", "--format", "csv",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0, "stderr: {}", stderr_of(&first));
    assert_eq!(first.stdout, second.stdout, "same seed must give identical output");
    let text = stdout_of(&first);
    assert!(text.starts_with("gamma_db,ser_bound,ser_mc"), "got {text:?}");
    assert_eq!(text.lines().count(), 3, "header + one row per grid point");

    let reseeded = run(&[
        "simulate", "--scheme", "geppm", "--symbols", "16", "--gamma-db", "8", "--trials",
        "2000", "--seed", "8", "--format", "csv",
    ]);
    assert_eq!(code(&reseeded), 0);
}

#[test]
fn simulate_bundle_reports_sync() {
    let dir = Scratch::new("simulate_bundle");
    let marker = dir.write_stdout(
        "z8.json",
        &run(&["construct-dss", "--thm", "index1", "--n", "8", "--format", "json"]),
    );
    let bundle = dir.path("bundle.json");
    let combined = run(&[
        "combine", "--marker", path_str(&marker), "--ppm", "--output", path_str(&bundle),
    ]);
    assert_eq!(code(&combined), 0);
    let out = run(&[
        "simulate", "--bundle", path_str(&bundle), "--gamma-db", "12", "--trials", "300",
        "--sync", "hard", "--words", "3", "--format", "json",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).contains("\"sync_error_rate\""), "{}", stdout_of(&out));
}

#[test]
fn bound_curve_has_empty_mc_columns() {
    let out = run(&["bound", "--scheme", "ppm", "--symbols", "16", "--gamma-db", "7,10",
        "--format", "csv"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    let mut lines = stdout_of(&out).lines();
    assert_eq!(lines.next(), Some("gamma_db,ser_bound,ser_mc,ser_mc_lo,ser_mc_hi,sync_err"));
    for line in lines {
        assert!(line.ends_with(",,,,"), "MC columns stay empty: {line:?}");
    }
}

#[test]
fn exit_code_contract() {
    // Usage errors are 2.
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["construct-dss", "--thm", "warp", "--n", "8"])), 2);
    assert_eq!(code(&run(&["construct-dss", "--thm", "cyc4", "--n", "15"])), 2);
    assert_eq!(code(&run(&["simulate", "--scheme", "ppm", "--symbols", "11",
        "--gamma-db", "10"])), 2);
    // Infeasible search parameters are a verification failure.
    assert_eq!(code(&run(&["search-dss", "--n", "2", "--rho", "3"])), 1);
    // Help and version are successes.
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    // A bad thread env fails any command up front.
    let bad_threads = bin().env("PPMSYNC_THREADS", "0").args(["table", "table1"]).output().unwrap();
    assert_eq!(code(&bad_threads), 2);
    let good_threads =
        bin().env("PPMSYNC_THREADS", "2").args(["table", "table1"]).output().unwrap();
    assert_eq!(code(&good_threads), 0);
}

#[test]
fn search_reports_minimum() {
    let out = run(&["search-dss", "--n", "8", "--rho", "1", "--format", "json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr_of(&out));
    assert!(stdout_of(&out).contains("\"redundancy\": 4"), "{}", stdout_of(&out));

    // An exhausted node cap is a failed verification, not a usage error.
    let capped = run(&["search-dss", "--n", "17", "--rho", "2", "--node-cap", "5"]);
    assert_eq!(code(&capped), 1);
}
