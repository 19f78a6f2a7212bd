use super::*;
use crate::linalg::FieldSpec;

fn with_task(doc: &InputDocument, task: TaskSpec) -> InputDocument {
    InputDocument { task: Some(task), ..doc.clone() }
}

const SMALL: &str = r#"{
  "field": {"type": "rational"},
  "bialgebra": {
    "name": "k[C2]",
    "dim": 2,
    "mult": [[[[0, "1"]], [[1, "1"]]], [[[1, "1"]], [[0, "1"]]]],
    "unit": [[0, "1"]],
    "comult": [[[0, 0, "1"]], [[1, 1, "1"]]],
    "counit": [[0, "1"], [1, "1"]]
  },
  "modules": [
    {"name": "V", "class": "yd", "dim": 1,
     "action": [[[[0, "1"]]], [[[0, "-1"]]]],
     "coaction": [[[0, 1, "1"]]]}
  ]
}"#;

#[test]
fn catalog_emit_round_trips() {
    for (name, field) in [
        ("sweedler", FieldSpec::Rational),
        ("cyclic-group(3)", FieldSpec::Rational),
        ("cyclic-group(2)", FieldSpec::Prime { p: 2 }),
    ] {
        let doc = catalog_document(name, field).unwrap();
        assert!(doc.is_valid(), "{name}: {:?}", doc.diagnostics);
        let back = parse_input(&emit_document(&doc)).unwrap();
        assert_eq!(back, doc, "{name}");
    }
}

#[test]
fn hand_written_document_parses() {
    let doc = parse_input(SMALL).unwrap();
    assert!(doc.is_valid());
    assert_eq!(doc.bialgebra.dim(), 2);
    assert_eq!(doc.module("V").unwrap().dim, 1);
    assert!(doc.module("W").is_err());
}

#[test]
fn syntax_errors_carry_position() {
    let broken = SMALL.replacen("\"dim\": 2,", "\"dim\": 2", 1);
    match parse_input(&broken) {
        Err(Error::Parse { line, column, .. }) => {
            assert_eq!(line, 6);
            assert!(column > 0);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn dangling_index_is_a_dimension_mismatch() {
    let bad = SMALL.replacen("[[[[0, \"1\"]], [[1, \"1\"]]]", "[[[[0, \"1\"]], [[2, \"1\"]]]", 1);
    match parse_input(&bad) {
        Err(Error::DimensionMismatch(msg)) => assert!(msg.contains("bialgebra.mult[0][1]"), "{msg}"),
        other => panic!("{other:?}"),
    }
    let bad = SMALL.replacen("\"coaction\": [[[0, 1, \"1\"]]]", "\"coaction\": [[[1, 1, \"1\"]]]", 1);
    assert!(matches!(parse_input(&bad), Err(Error::DimensionMismatch(_))));
}

#[test]
fn half_is_invalid_mod_two() {
    let bad = SMALL
        .replacen("{\"type\": \"rational\"}", "{\"type\": \"prime\", \"p\": 2}", 1)
        .replacen("[[0, \"1\"], [1, \"1\"]]", "[[0, \"1/2\"], [1, \"1\"]]", 1);
    assert!(matches!(parse_input(&bad), Err(Error::InvalidCoefficient { .. })));
}

#[test]
fn non_prime_characteristic_is_rejected() {
    let bad = SMALL.replacen("{\"type\": \"rational\"}", "{\"type\": \"prime\", \"p\": 4}", 1);
    assert_eq!(parse_input(&bad), Err(Error::NonPrime(4)));
}

#[test]
fn axiom_failures_become_diagnostics() {
    // g acting by 2 breaks g·g = 1
    let bad = SMALL.replacen("\"-1\"", "\"2\"", 1);
    let doc = parse_input(&bad).unwrap();
    assert!(!doc.is_valid());
    assert!(doc.diagnostics.iter().all(|d| d.subject == "module V"));
    let report = run_task(&with_task(&doc, TaskSpec::new(Command::Check))).unwrap();
    assert!(!report.passed());
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn builtin_modules_resolve() {
    let text = r#"{"field": {"type": "rational"}, "bialgebra": {"catalog": "sweedler"},
      "modules": [{"name": "F", "builtin": "free:2"}, {"name": "S", "builtin": "catalog:sign/g"}]}"#;
    let doc = parse_input(text).unwrap();
    assert!(doc.is_valid());
    assert_eq!(doc.module("F").unwrap().dim, 8);
    assert_eq!(doc.module("S").unwrap().class, crate::structures::ModuleClass::Yd);
    let bad = text.replace("free:2", "free:x");
    assert!(matches!(parse_input(&bad), Err(Error::Invalid(_))));
}

#[test]
fn cohomology_task_on_sweedler_trivial() {
    let doc = catalog_document("sweedler", FieldSpec::Rational).unwrap();
    let mut task = TaskSpec::new(Command::Cohomology);
    task.m = Some("triv".into());
    let report = run_task(&with_task(&doc, task)).unwrap();
    assert!(report.passed());
    let Tables::Cohomology(c) = &report.tables else { panic!() };
    assert_eq!(c.h(0), Some(1));
    assert_eq!(c.degrees.len(), 3);
}

#[test]
fn vanishing_task_on_sweedler() {
    let doc = catalog_document("sweedler", FieldSpec::Rational).unwrap();
    let report = run_task(&with_task(&doc, TaskSpec::new(Command::Vanishing))).unwrap();
    assert!(report.passed(), "{}", report.render_text());
    let Tables::Vanishing(v) = &report.tables else { panic!() };
    assert_eq!(&v.direct.h_vector()[1..], &[0, 0]);
}

#[test]
fn ext_compare_task_on_c2() {
    let doc = catalog_document("cyclic-group(2)", FieldSpec::Rational).unwrap();
    let report = run_task(&with_task(&doc, TaskSpec::new(Command::ExtCompare))).unwrap();
    assert!(report.passed());
    let Tables::ExtCompare(c) = &report.tables else { panic!() };
    assert_eq!(c.rows.len(), 3);
    assert!(c.rows[1].agree);
    assert!(!report.verdicts[2].asserted);
}

#[test]
fn reports_are_deterministic() {
    let doc = catalog_document("cyclic-group(3)", FieldSpec::Rational).unwrap();
    let mut task = TaskSpec::new(Command::Cohomology);
    task.m = Some("rot2/g^1".into());
    let doc = with_task(&doc, task);
    let a = run_task(&doc).unwrap();
    let b = run_task(&doc).unwrap();
    assert_eq!(a.to_json_deterministic(), b.to_json_deterministic());
    let v: serde_json::Value = serde_json::from_str(&a.to_json()).unwrap();
    assert!(v["conventions"]["total-differential"].is_string());
    assert!(v["runtimes_ms"]["total"].is_number());
}

#[test]
fn budget_and_errors_map_to_exit_codes() {
    let doc = catalog_document("sweedler", FieldSpec::Rational).unwrap();
    let mut task = TaskSpec::new(Command::Cohomology);
    task.budget = Some(100);
    let err = run_task(&with_task(&doc, task)).unwrap_err();
    assert_eq!(exit_code(&err), 3);
    assert!(err.to_string().contains("at ("), "{err}");
    let mut task = TaskSpec::new(Command::Cohomology);
    task.theory = Some("nope".into());
    assert_eq!(exit_code(&run_task(&with_task(&doc, task)).unwrap_err()), 2);
    assert_eq!(exit_code(&Error::AssertionFailed("x".into())), 1);
}

#[test]
fn catalog_emit_task_reemits_explicit_tables() {
    let text = r#"{"field": {"type": "rational"}, "bialgebra": {"catalog": "cyclic-group(2)"},
      "modules": [{"name": "T", "builtin": "trivial"}], "task": {"command": "catalog-emit"}}"#;
    let doc = parse_input(text).unwrap();
    let report = run_task(&doc).unwrap();
    let Tables::Catalog { document } = &report.tables else { panic!() };
    let back = parse_input(&document.to_string()).unwrap();
    assert_eq!(back.bialgebra, doc.bialgebra);
    assert_eq!(back.modules, doc.modules);
}
