//! End-to-end tests of the binary: argument validation, exit codes,
//! diagnostics, file outputs, and JSON report stability.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const GOLDEN_L5: &str = "5\n1 2 3 4 5\n2 1 5 3 4\n3 4 1 5 2\n4 5 2 1 3\n5 3 4 2 1\n";

fn nafil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nafil"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write_cyclic_table(path: &Path, n: usize) {
    let mut text = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| ((i + j) % n + 1).to_string()).collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    std::fs::write(path, text).unwrap();
}

struct Workspace {
    _dir: TempDir,
    root: PathBuf,
}

impl Workspace {
    fn new() -> Self {
        let dir = TempDir::new().unwrap();
        let root = dir.path().to_path_buf();
        Workspace { _dir: dir, root }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.root.join(name)
    }

    fn arg(&self, name: &str) -> String {
        self.path(name).display().to_string()
    }
}

#[test]
fn construct_writes_the_golden_order_5_table() {
    let ws = Workspace::new();
    let out = nafil(&["construct", "--order", "5", "--out", &ws.arg("l5.txt")]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("wrote order-5 table"));
    assert_eq!(std::fs::read_to_string(ws.path("l5.txt")).unwrap(), GOLDEN_L5);
}

#[test]
fn construct_quiet_prints_nothing() {
    let ws = Workspace::new();
    let out = nafil(&["--quiet", "construct", "--m", "2", "--out", &ws.arg("l5.txt")]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "");
    assert_eq!(std::fs::read_to_string(ws.path("l5.txt")).unwrap(), GOLDEN_L5);
}

#[test]
fn construct_emit_trace_writes_the_sibling_file() {
    let ws = Workspace::new();
    let out = nafil(&[
        "construct",
        "--m",
        "3",
        "--out",
        &ws.arg("l7.txt"),
        "--emit-trace",
    ]);
    assert_eq!(exit_code(&out), 0);
    let trace = std::fs::read_to_string(ws.path("l7.txt.trace")).unwrap();
    assert!(trace.starts_with("# block: group_m (3x3)\n"));
    assert!(trace.contains("# block: bottom_right (4x4)\n"));
    assert!(trace.ends_with(&std::fs::read_to_string(ws.path("l7.txt")).unwrap()));
}

#[test]
fn construct_rejects_bad_orders_with_exit_2() {
    let ws = Workspace::new();
    for bad in ["4", "6", "3", "1"] {
        let out = nafil(&["construct", "--order", bad, "--out", &ws.arg("x.txt")]);
        assert_eq!(exit_code(&out), 2, "order {bad}");
        assert!(
            stderr(&out).contains("order must be odd and >= 5"),
            "order {bad}: {}",
            stderr(&out)
        );
        assert!(!ws.path("x.txt").exists());
    }
    let out = nafil(&["construct", "--m", "1", "--out", &ws.arg("x.txt")]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("m must be at least 2"));
}

#[test]
fn construct_requires_exactly_one_size_flag() {
    let ws = Workspace::new();
    let neither = nafil(&["construct", "--out", &ws.arg("x.txt")]);
    assert_eq!(exit_code(&neither), 2);
    let both = nafil(&[
        "construct",
        "--order",
        "5",
        "--m",
        "2",
        "--out",
        &ws.arg("x.txt"),
    ]);
    assert_eq!(exit_code(&both), 2);
}

#[test]
fn construct_accepts_a_replacement_subgroup() {
    let ws = Workspace::new();
    std::fs::write(
        ws.path("klein.txt"),
        "4\n1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n",
    )
    .unwrap();
    let out = nafil(&[
        "construct",
        "--m",
        "4",
        "--lm-source",
        &ws.arg("klein.txt"),
        "--out",
        &ws.arg("l9k.txt"),
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = std::fs::read_to_string(ws.path("l9k.txt")).unwrap();
    assert!(text.starts_with("9\n1 2 3 4 5 6 7 8 9\n2 1 4 3 6 7 8 9 5\n"));
}

#[test]
fn construct_rejects_a_nonassociative_subgroup_with_exit_1() {
    let ws = Workspace::new();
    std::fs::write(ws.path("l5.txt"), GOLDEN_L5).unwrap();
    let out = nafil(&[
        "construct",
        "--m",
        "5",
        "--lm-source",
        &ws.arg("l5.txt"),
        "--out",
        &ws.arg("x.txt"),
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("not associative"));
    assert!(stderr(&out).contains("(2, 2, 3)"));
}

#[test]
fn analyze_succeeds_even_when_properties_fail() {
    let ws = Workspace::new();
    std::fs::write(ws.path("l5.txt"), GOLDEN_L5).unwrap();
    let out = nafil(&["analyze", "--in", &ws.arg("l5.txt")]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("ASSOC: fails, witness (2, 2, 3)"));
    assert!(text.contains("CIP: holds"));
    assert!(text.contains("subgroups: 4 of order 2"));
    assert!(text.contains("simple: yes"));
    // No Jacobi line without the flag.
    assert!(!text.contains("jacobi"));
}

#[test]
fn analyze_quiet_suppresses_the_summary_but_writes_json() {
    let ws = Workspace::new();
    std::fs::write(ws.path("l5.txt"), GOLDEN_L5).unwrap();
    let out = nafil(&[
        "--quiet",
        "analyze",
        "--in",
        &ws.arg("l5.txt"),
        "--json-out",
        &ws.arg("report.json"),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "");
    assert!(ws.path("report.json").exists());
}

#[test]
fn analyze_json_report_is_stable_up_to_the_timestamp() {
    let ws = Workspace::new();
    std::fs::write(ws.path("l5.txt"), GOLDEN_L5).unwrap();
    for name in ["a.json", "b.json"] {
        let out = nafil(&[
            "--quiet",
            "analyze",
            "--in",
            &ws.arg("l5.txt"),
            "--jacobi",
            "--json-out",
            &ws.arg(name),
        ]);
        assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    }
    let read = |name: &str| -> serde_json::Value {
        serde_json::from_str(&std::fs::read_to_string(ws.path(name)).unwrap()).unwrap()
    };
    let (mut a, mut b) = (read("a.json"), read("b.json"));
    assert!(a["generated_at_unix"].is_u64());
    a["generated_at_unix"] = 0.into();
    b["generated_at_unix"] = 0.into();
    assert_eq!(a, b);
    // The typed report round-trips through its own JSON.
    let envelope: nafil_cli::report::ReportEnvelope =
        serde_json::from_str(&std::fs::read_to_string(ws.path("a.json")).unwrap()).unwrap();
    let again = serde_json::to_value(&envelope.report).unwrap();
    assert_eq!(again, a["report"]);
}

#[test]
fn analyze_rejects_non_latin_input_with_position_diagnostics() {
    let ws = Workspace::new();
    std::fs::write(ws.path("bad.txt"), "3\n1 2 3\n2 3 1\n2 3 1\n").unwrap();
    let out = nafil(&["analyze", "--in", &ws.arg("bad.txt")]);
    assert_eq!(exit_code(&out), 1);
    let err = stderr(&out);
    assert!(err.contains("not a Latin square"), "{err}");
    assert!(err.contains("column 1"), "{err}");
}

#[test]
fn analyze_rejects_parse_errors_with_line_numbers() {
    let ws = Workspace::new();
    std::fs::write(ws.path("bad.txt"), "3\n1 2 3\n2 x 1\n3 1 2\n").unwrap();
    let out = nafil(&["analyze", "--in", &ws.arg("bad.txt")]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
    let missing = nafil(&["analyze", "--in", &ws.arg("nope.txt")]);
    assert_eq!(exit_code(&missing), 1);
}

#[test]
fn analyze_rejects_identity_free_latin_squares_with_exit_1() {
    let ws = Workspace::new();
    // The order-5 counter-cyclic table: Latin but has no two-sided
    // identity.
    std::fs::write(
        ws.path("cc5.txt"),
        "5\n1 5 4 3 2\n2 1 5 4 3\n3 2 1 5 4\n4 3 2 1 5\n5 4 3 2 1\n",
    )
    .unwrap();
    let out = nafil(&["analyze", "--in", &ws.arg("cc5.txt")]);
    assert_eq!(exit_code(&out), 1);
    assert!(stderr(&out).contains("identity"), "{}", stderr(&out));
}

#[test]
fn analyze_enforces_the_sweep_cap_with_exit_2() {
    let ws = Workspace::new();
    write_cyclic_table(&ws.path("c300.txt"), 300);
    let out = nafil(&["analyze", "--in", &ws.arg("c300.txt")]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("--max-order-override"), "{}", stderr(&out));
}

#[test]
fn analyze_override_extends_the_subloop_cap() {
    let ws = Workspace::new();
    let out = nafil(&["construct", "--m", "35", "--out", &ws.arg("l71.txt")]);
    assert_eq!(exit_code(&out), 0);
    let plain = nafil(&["analyze", "--in", &ws.arg("l71.txt")]);
    assert_eq!(exit_code(&plain), 0);
    assert!(stdout(&plain).contains("subloop analysis: skipped"));
    let raised = nafil(&[
        "analyze",
        "--in",
        &ws.arg("l71.txt"),
        "--max-order-override",
        "71",
    ]);
    assert_eq!(exit_code(&raised), 0);
    assert!(stdout(&raised).contains("subgroups:"));
    assert!(stdout(&raised).contains("simple: yes"));
}

#[test]
fn qcheck_reports_verdicts_for_inverse_free_identities() {
    let holds = nafil(&["qcheck", "--k", "7", "--property", "lbol"]);
    assert_eq!(exit_code(&holds), 0);
    assert_eq!(stdout(&holds), "LBOL: holds\n");

    let fails = nafil(&["qcheck", "--k", "5", "--property", "ASSOC"]);
    assert_eq!(exit_code(&fails), 0);
    assert_eq!(stdout(&fails), "ASSOC: fails, witness (1, 1, 2)\n");
}

#[test]
fn qcheck_rejects_bad_arguments_with_exit_2() {
    let small = nafil(&["qcheck", "--k", "2", "--property", "lbol"]);
    assert_eq!(exit_code(&small), 2);
    assert!(stderr(&small).contains("k must be at least 3"));

    let inverse_based = nafil(&["qcheck", "--k", "5", "--property", "cip"]);
    assert_eq!(exit_code(&inverse_based), 2);
    assert!(stderr(&inverse_based).contains("inverses"), "{}", stderr(&inverse_based));

    let unknown = nafil(&["qcheck", "--k", "5", "--property", "frobnicate"]);
    assert_eq!(exit_code(&unknown), 2);
    assert!(stderr(&unknown).contains("unknown property"));
}

#[test]
fn usage_errors_from_the_parser_exit_2() {
    let out = nafil(&["frobnicate"]);
    assert_eq!(exit_code(&out), 2);
    let out = nafil(&[]);
    assert_eq!(exit_code(&out), 2);
}
