use std::path::Path;

use homhopf_cli::{run, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["homhopf"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn body_without_labels(path: &Path) -> String {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with("name ") && !l.starts_with("basis "))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn passing_check_exits_zero() {
    let (code, out, _) = call(&["check", "cyclic:3"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("0 failed"));
}

#[test]
fn failing_check_exits_one_with_witness() {
    let (code, out, _) = call(&["check", "ax1", "--level", "bialgebra"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("[FAIL] bialgebra: comultiplication is multiplicative"));
    assert!(out.contains("witness at [1, 1]"));
}

#[test]
fn algebra_level_of_ax1_passes() {
    assert_eq!(call(&["check", "ax1", "--level", "algebra"]).0, EXIT_PASS);
}

#[test]
fn unknown_input_exits_two() {
    let (code, _, err) = call(&["check", "no_such_thing"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("no_such_thing"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(call(&["check", "kz2", "--level", "nonsense"]).0, EXIT_INPUT);
    assert_eq!(call(&["verify", "no-such-suite", "--algebra", "kz2"]).0, EXIT_INPUT);
    assert_eq!(call(&["--jobs", "0", "catalog"]).0, EXIT_INPUT);
}

#[test]
fn malformed_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.hh");
    std::fs::write(&f, "homhopf 1\ndim 2\nfield_char 0\nblock mul 2 2 2\n0 0 0 1/0\n").unwrap();
    let (code, _, err) = call(&["check", p(&f)]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("line 5"), "{err}");
}

#[test]
fn missing_block_for_level_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("h.hh");
    assert_eq!(call(&["construct", "heisenberg", "kz2", "--out", p(&f)]).0, EXIT_PASS);
    assert_eq!(call(&["check", p(&f), "--level", "algebra"]).0, EXIT_PASS);
    assert_eq!(call(&["check", p(&f), "--level", "hopf"]).0, EXIT_INPUT);
}

#[test]
fn rejected_precondition_exits_one() {
    let (code, out, _) = call(&["construct", "dual-pair-double", "sweedler_hom"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("construction rejected"));
}

#[test]
fn force_skips_preconditions() {
    assert_eq!(call(&["construct", "dual-pair-double", "sweedler_hom", "--force"]).0, EXIT_PASS);
}

#[test]
fn twist_of_double_equals_heisenberg_of_opposite() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.hh");
    let s = dir.path().join("s.hh");
    let t = dir.path().join("t.hh");
    let op = dir.path().join("op.hh");
    let h = dir.path().join("h.hh");
    for input in ["kz2", "cyclic:3", "sweedler_hom"] {
        assert_eq!(call(&["construct", "double", input, "--out", p(&d)]).0, EXIT_PASS);
        assert_eq!(call(&["construct", "sigma", input, "--out", p(&s)]).0, EXIT_PASS);
        assert_eq!(call(&["construct", "twist", p(&d), "--cocycle", p(&s), "--out", p(&t)]).0, EXIT_PASS);
        assert_eq!(call(&["construct", "op", input, "--out", p(&op)]).0, EXIT_PASS);
        assert_eq!(call(&["construct", "heisenberg", p(&op), "--out", p(&h)]).0, EXIT_PASS);
        assert_eq!(body_without_labels(&t), body_without_labels(&h), "{input}");
    }
}

#[test]
fn construct_output_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.hh");
    assert_eq!(call(&["construct", "double", "cyclic:2", "--out", p(&d)]).0, EXIT_PASS);
    assert_eq!(call(&["check", p(&d), "--level", "hopf"]).0, EXIT_PASS);
}

#[test]
fn catalog_export_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("x.hh");
    let (_, text, _) = call(&["catalog", "export", "sweedler_hom"]);
    assert_eq!(call(&["catalog", "export", "sweedler_hom", "--out", p(&f)]).0, EXIT_PASS);
    assert_eq!(std::fs::read_to_string(&f).unwrap(), text);
    let (code, list, _) = call(&["catalog", "list"]);
    assert_eq!(code, EXIT_PASS);
    assert!(list.lines().any(|l| l == "ax1"));
}

#[test]
fn verify_report_document_is_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.json");
    let (code, _, _) = call(&["verify", "double-r-matrix", "--algebra", "cyclic:2", "--report", p(&r)]);
    assert_eq!(code, EXIT_PASS);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&r).unwrap()).unwrap();
    assert_eq!(doc["tool"], "homhopf");
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["exit_status"], 0);
    assert_eq!(doc["results"][0]["kind"], "suite");
    assert_eq!(doc["digest"].as_str().unwrap().len(), 64);
}

#[test]
fn report_digest_ignores_wall_time() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    call(&["verify", "heisenberg-twist", "--algebra", "kz2", "--report", p(&a)]);
    call(&["--jobs", "2", "verify", "heisenberg-twist", "--algebra", "kz2", "--report", p(&b)]);
    let read = |f: &Path| -> serde_json::Value { serde_json::from_str(&std::fs::read_to_string(f).unwrap()).unwrap() };
    assert_eq!(read(&a)["digest"], read(&b)["digest"]);
}

#[test]
fn failing_suite_exits_one_and_records_it() {
    let dir = tempfile::tempdir().unwrap();
    let r = dir.path().join("r.json");
    let (code, _, _) = call(&["verify", "heisenberg-twist", "--algebra", "sweedler_hom:2", "--report", p(&r)]);
    assert_eq!(code, EXIT_FAIL);
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&r).unwrap()).unwrap();
    assert_eq!(doc["passed"], false);
    assert_eq!(doc["exit_status"], 1);
}

#[test]
fn suite_without_required_data_exits_two() {
    assert_eq!(call(&["verify", "bicrossproduct", "--algebra", "kz2"]).0, EXIT_INPUT);
}

#[test]
fn broken_action_fails_the_bicrossproduct_suite() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("ax1.hh");
    let bad = dir.path().join("broken.hh");
    assert_eq!(call(&["catalog", "export", "ax1", "--out", p(&good)]).0, EXIT_PASS);
    let text = std::fs::read_to_string(&good).unwrap();
    let section = text.find("block action").unwrap();
    // g . 1 = -1 breaks unitality of the action.
    let line = section + text[section..].find("\n1 0 0 1\n").unwrap();
    let broken = format!("{}\n1 0 0 -1\n{}", &text[..line], &text[line + "\n1 0 0 1\n".len()..]);
    std::fs::write(&bad, broken).unwrap();
    let (code, out, _) = call(&["verify", "bicrossproduct", "--algebra", p(&bad)]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("[FAIL] action makes a module algebra"), "{out}");
    assert_eq!(call(&["construct", "bicross", p(&bad)]).0, EXIT_FAIL);
}

#[test]
fn dual_of_the_one_dimensional_algebra() {
    let (code, out, _) = call(&["construct", "dual", "trivial"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("\ndim 1\n"));
}

#[test]
fn double_of_cyclic_three_follows_the_closed_form() {
    let (code, out, _) = call(&["verify", "double-r-matrix", "--algebra", "cyclic:4"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("[ok] double products follow the cyclic closed form"));
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.hh");
    assert_eq!(call(&["construct", "double", "cyclic:3", "--out", p(&d)]).0, EXIT_PASS);
    assert!(std::fs::read_to_string(&d).unwrap().contains("\ndim 9\n"));
}
