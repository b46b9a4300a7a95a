//! End-to-end tests driving the compiled binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

static DIR_COUNTER: AtomicU32 = AtomicU32::new(0);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_superpose"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn scratch_dir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "superpose-cli-test-{}-{}",
        std::process::id(),
        DIR_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn decompose_prints_the_single_term_formula() {
    let out = run(&["decompose", "--in", data("singular.tbl").to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(0,0,1)[(0,0,1)@1 + (-1,-1,0)@2]\n");
}

#[test]
fn decompose_unpruned_keeps_every_point() {
    let out = run(&[
        "decompose",
        "--unpruned",
        "--in",
        data("singular.tbl").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 9);
}

#[test]
fn decompose_output_reparses() {
    let dir = scratch_dir();
    let out_path = dir.join("formula.txt");
    let out = run(&[
        "decompose",
        "--in",
        data("f3.tbl").to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&out_path).unwrap();
    let alpha = superpose_core::Alphabet::ternary();
    let formula = superpose_core::FormulaExpression::parse(&text, &alpha).unwrap();
    assert_eq!(formula.term_count(), 6);
    fs::remove_dir_all(dir).ok();
}

#[test]
fn apply_commutes_and_retensions() {
    // identity-permutation commutation reproduces the input cells
    let out = run(&[
        "apply",
        "--in",
        data("f1.tbl").to_str().unwrap(),
        "--op",
        "C(1,2,0)",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("-1: -1 1 0\n"));

    // the worked retension: f1 with outputs mapped through (1,0,0)
    let out = run(&[
        "apply",
        "--in",
        data("f1.tbl").to_str().unwrap(),
        "--op",
        "T0:conv((1,0,0))",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "dfun N=3 M=2\n-1: 1 0 0\n0: 0 1 0\n1: 0 0 1\n");
}

#[test]
fn apply_sums_several_inputs() {
    let out = run(&[
        "apply",
        "--in",
        data("f1.tbl").to_str().unwrap(),
        "--in",
        data("f3.tbl").to_str().unwrap(),
        "--op",
        "SUM",
    ]);
    assert!(out.status.success());
    // f1 + f3 pointwise: first row (-1+1, 1+-1, 0+0) = (0, 0, 0)
    assert!(stdout(&out).contains("-1: 0 0 0\n"));

    // two inputs without a SUM cannot produce one artifact
    let out = run(&[
        "apply",
        "--in",
        data("f1.tbl").to_str().unwrap(),
        "--in",
        data("f3.tbl").to_str().unwrap(),
        "--op",
        "C(1,2,0)",
    ]);
    assert!(!out.status.success());
}

#[test]
fn solve_writes_solution_and_trace() {
    let dir = scratch_dir();
    let out = run(&[
        "solve",
        "--eq",
        data("two_branch.eq").to_str().unwrap(),
        "--bind",
        &format!("f1={}", data("f1.tbl").display()),
        "--bind",
        &format!("f2={}", data("f2.tbl").display()),
        "--bind",
        &format!("f3={}", data("f3.tbl").display()),
        "--out",
        dir.to_str().unwrap(),
        "--trace",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let solution = fs::read_to_string(dir.join("solution.tbl")).unwrap();
    assert_eq!(solution, fs::read_to_string(data("solution.tbl")).unwrap());

    let formula = fs::read_to_string(dir.join("solution.formula")).unwrap();
    assert_eq!(formula.lines().count(), 24);

    // every emitted table re-parses to an equal object
    let alpha = superpose_core::Alphabet::ternary();
    for i in 1..=6 {
        for stem in [
            "step2_term{}_left",
            "step2_term{}_right",
            "step3_term{}",
            "step4_term{}",
        ] {
            let name = format!("{}.tbl", stem.replace("{}", &i.to_string()));
            let text = fs::read_to_string(dir.join("trace").join(&name)).unwrap();
            let table = superpose_core::DiscreteFunction::parse_table(&text, &alpha).unwrap();
            assert_eq!(table.to_table_text(), text, "{name}");
        }
    }
    assert!(dir.join("trace/step5_total.tbl").exists());
    assert!(dir.join("trace/step6_solution.tbl").exists());
    fs::remove_dir_all(dir).ok();
}

#[test]
fn solve_without_out_prints_table_and_formula() {
    let out = run(&[
        "solve",
        "--eq",
        data("two_branch.eq").to_str().unwrap(),
        "--bind",
        &format!("f1={}", data("f1.tbl").display()),
        "--bind",
        &format!("f2={}", data("f2.tbl").display()),
        "--bind",
        &format!("f3={}", data("f3.tbl").display()),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("dfun N=3 M=3 name=solution\n"));
    assert!(text.contains("(0,0,-1){(0,0,1)[(1,0,0)@1 + (0,-1,-1)@2] + (0,-1,-1)@3}"));
}

#[test]
fn solve_handles_general_equation_shapes_by_substitution() {
    let dir = scratch_dir();
    let eq = dir.join("one_branch.eq");
    fs::write(&eq, "solve x : x f1 a = c\n").unwrap();
    let out = run(&[
        "solve",
        "--eq",
        eq.to_str().unwrap(),
        "--bind",
        &format!("f1={}", data("f1.tbl").display()),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.starts_with("dfun N=3 M=2 name=solution\n"));
    // f1 is a bijection in its first argument, so every cell is one element
    let alpha = superpose_core::Alphabet::ternary();
    let table_text: String = text.lines().take(4).map(|l| format!("{l}\n")).collect();
    let w = superpose_core::DiscreteFunction::parse_table(&table_text, &alpha).unwrap();
    assert!(w.cells().iter().all(|c| c.len() == 1));
    fs::remove_dir_all(dir).ok();
}

#[test]
fn laws_report_lines_and_determinism() {
    let args = [
        "laws",
        "--check",
        "commutation",
        "--samples",
        "24",
        "--seed",
        "7",
    ];
    let first = run(&args);
    assert!(first.status.success());
    let text = stdout(&first);
    assert!(text.lines().count() == 36, "{text}");
    assert!(text.contains("LAW commutation-pair C(1,2,0)*C(1,2,0) PASS n=24 seed=7"));
    assert!(text.lines().all(|l| l.contains(" PASS ")));

    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "identical inputs and seed, identical bytes");
}

#[test]
fn laws_writes_report_and_summary_files() {
    let dir = scratch_dir();
    let report = dir.join("report.txt");
    let summary = dir.join("summary.txt");
    let out = run(&[
        "laws",
        "--check",
        "distribution",
        "--samples",
        "24",
        "--seed",
        "11",
        "--out",
        report.to_str().unwrap(),
        "--summary",
        summary.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report_text = fs::read_to_string(&report).unwrap();
    assert_eq!(report_text, stdout(&out));
    assert!(fs::read_to_string(&summary).unwrap().starts_with(&report_text));
    fs::remove_dir_all(dir).ok();
}

#[test]
fn lift_runs_verbs_over_the_operator_alphabet() {
    let out = run(&[
        "lift",
        "decompose",
        "--in",
        data("op_singular.tbl").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(o,o,e)[(o,o,e)@1 + (-e,-e,o)@2]\n");
}

#[test]
fn wider_alphabets_are_inferred_from_the_labels() {
    // balanced -2..2 labels fail the 0..4 parse and fall through
    let out = run(&["decompose", "--in", data("balanced5.tbl").to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4, "one term per non-zero point: {text}");
    // the value slot is element 1, fourth in -2..2 label order
    assert!(text.contains("(0,0,0,2,0)[(1,0,0,0,0)@1]"), "five-symbol term: {text}");
}

#[test]
fn show_renders_the_block_layout() {
    let out = run(&["show", "--in", data("solution.tbl").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[var3 = -1]"));
    assert!(text.contains("-1*0*1"));
}

#[test]
fn exit_codes_distinguish_parse_and_validation_errors() {
    let dir = scratch_dir();
    // malformed table: parse error, exit 1
    let bad = dir.join("bad.tbl");
    fs::write(&bad, "dfun N=3 M=2\n-1: 1 0\n0: 0 0 0\n1: 0 0 0\n").unwrap();
    let out = run(&["decompose", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // shape violation: validation error, exit 2
    let out = run(&[
        "apply",
        "--in",
        data("f1.tbl").to_str().unwrap(),
        "--op",
        "C(2,3,0,1)",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // usage error, exit 1
    let out = run(&["decompose"]);
    assert_eq!(out.status.code(), Some(1));
    fs::remove_dir_all(dir).ok();
}
