use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.display().to_string()
}

fn ydlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ydlab")).args(args).output().expect("run ydlab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_failure(o: &Output) -> String {
    stdout(o).lines().find(|l| l.starts_with("FAIL ")).unwrap_or_default().to_string()
}

fn body(o: &Output) -> String {
    stdout(o).lines().skip(1).collect::<Vec<_>>().join("\n")
}

#[test]
fn transformation_group_yd_suite_passes() {
    let o = ydlab(&["check", "--suite", "yd", "--catalog", "s3-on-3points"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("0 failed: PASS\n"));
}

#[test]
fn all_suites_pass_on_z2() {
    let o = ydlab(&["check", "--suite", "all", "--catalog", "z2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    for subject in ["PASS K(z2)/antipode law", "PASS multiplier K(z2)|C[z2]/unitarity", "Theta coaction", "PASS integrals of K(z2)"] {
        assert!(out.contains(subject), "missing {subject}");
    }
}

#[test]
fn broken_antipode_fails_at_the_antipode_law() {
    let o = ydlab(&["check", "--suite", "hopf", "--file", &data("broken_antipode.model")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(first_failure(&o).starts_with("FAIL K(z3)/antipode law: "), "{}", first_failure(&o));
}

#[test]
fn scaled_pairing_row_fails_multiplicativity() {
    let o = ydlab(&["check", "--suite", "pairing", "--file", &data("scaled_pairing_row.model")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(first_failure(&o).contains("/multiplicativity in A: "), "{}", first_failure(&o));
}

#[test]
fn negated_multiplier_fails_the_coproduct_identity() {
    let o = ydlab(&["check", "--suite", "pairing", "--file", &data("negated_multiplier.model")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(first_failure(&o).contains("/(Δ_A⊗id)U = U13U23: "), "{}", first_failure(&o));
}

#[test]
fn graded_dual_coaction_fails_the_yd_identity() {
    let o = ydlab(&["check", "--suite", "aqg", "--file", &data("graded_dual_coaction.model")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(first_failure(&o).contains("/direct YD: "), "{}", first_failure(&o));
    assert!(stdout(&o).contains("PASS YD K(s3)-*-algebra/routes agree"));
}

#[test]
fn non_associative_table_is_rejected_with_the_triple() {
    let o = ydlab(&["check", "--suite", "hopf", "--file", &data("not_a_group.model")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(first_failure(&o), "FAIL latin5/associativity: (a a) b differs from a (a b)");
}

#[test]
fn non_action_is_rejected_at_the_composition_law() {
    let o = ydlab(&["check", "--suite", "yd", "--file", &data("not_an_action.model")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(first_failure(&o).starts_with("FAIL s3-action/composition law: "), "{}", first_failure(&o));
    assert!(stdout(&o).contains("PASS s3/associativity"));
}

#[test]
fn model_file_matches_catalog_entry() {
    let file = ydlab(&["check", "--suite", "hopf", "--file", &data("z3.model")]);
    let cat = ydlab(&["check", "--suite", "hopf", "--catalog", "z3"]);
    assert_eq!(file.status.code(), Some(0));
    assert_eq!(body(&file), body(&cat));
    let file = ydlab(&["check", "--suite", "yd", "--file", &data("s3_on_three_points.model")]);
    let cat = ydlab(&["check", "--suite", "yd", "--catalog", "s3-on-3points"]);
    assert_eq!(body(&file), body(&cat));
}

#[test]
fn parse_errors_exit_2_with_a_line_number() {
    let o = ydlab(&["check", "--suite", "hopf", "--file", &data("bad_row.model")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 5: table row has 2 entries, expected 3"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["check", "--suite", "everything", "--catalog", "z2"],
        vec!["check", "--suite", "hopf", "--catalog", "z7"],
        vec!["check", "--suite", "hopf"],
        vec!["check", "--suite", "hopf", "--catalog", "z2", "--file", "x"],
        vec!["check", "--suite", "hopf", "--file", "/nonexistent/model"],
        vec!["check", "--suite", "hopf", "--catalog", "d4"],
    ] {
        let o = ydlab(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    let args = ["check", "--suite", "constructions", "--catalog", "z3-on-z3", "--format", "structured"];
    let a = ydlab(&args);
    let b = ydlab(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn structured_output_schema() {
    let o = ydlab(&["check", "--suite", "hopf", "--file", &data("broken_antipode.model"), "--format", "structured"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let blocks: Vec<&str> = out.split("\n\n").collect();
    assert!(blocks[0].starts_with("ydlab: "));
    assert!(blocks[0].ends_with("perturbations: antipode"));
    let failing: Vec<&&str> = blocks.iter().filter(|b| b.contains("status: fail")).collect();
    assert!(failing[0].starts_with("subject: K(z3)\ncheck: antipode law\nstatus: fail\ndetail: "));
    for b in &blocks[1..blocks.len() - 1] {
        let keys: Vec<&str> = b.lines().map(|l| l.split_once(": ").unwrap().0).collect();
        assert!(keys == ["subject", "check", "status"] || keys == ["subject", "check", "status", "detail"], "{b}");
    }
    assert!(blocks.last().unwrap().ends_with("status: fail\n"));
}

#[test]
fn catalog_lists_every_model() {
    let o = ydlab(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 10);
    assert!(out.contains("s3-on-3points\torder 6\tacting on 3 points"));
}
