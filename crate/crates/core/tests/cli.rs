use std::process::{Command, Output};

use contact_kirby::cli::{ClassifyDocument, ExpandDocument, ReportDocument};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contact-kirby"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn reemit<T: DeserializeOwned + Serialize>(text: &str) -> String {
    let doc: T = serde_json::from_str(text).unwrap();
    contact_kirby::cli::to_canonical_json(&doc)
}

fn no_decimal_points(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Number(n) => n.is_i64() || n.is_u64(),
        serde_json::Value::String(s) => !s.parse::<f64>().is_ok() || !s.contains('.'),
        serde_json::Value::Array(a) => a.iter().all(no_decimal_points),
        serde_json::Value::Object(o) => o.values().all(no_decimal_points),
        _ => true,
    }
}

#[test]
fn expand_examples() {
    for (input, first) in [("-3/2", "[-3, -2]"), ("-1", "[-2]"), ("-6/5", "[-3, -2, -2, -2, -2]")] {
        let o = bin(&["expand", input]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().next(), Some(first));
    }
    let o = bin(&["expand", "-3/2", "--format", "json"]);
    let doc: ExpandDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.coefficients, vec![-3, -2]);
    assert_eq!(doc.value, "-3/2");
    assert_eq!(reemit::<ExpandDocument>(&stdout(&o)), stdout(&o));
}

#[test]
fn expand_rejects_bad_input() {
    for input in ["2", "0", "x/2", "1/0"] {
        let o = bin(&["expand", input]);
        assert_eq!(o.status.code(), Some(2), "{input}");
        assert!(!stderr(&o).is_empty());
        assert!(stdout(&o).is_empty());
    }
}

#[test]
fn convert_examples() {
    let o = bin(&["convert", "--tb", "-2", "--rot", "-1", "--coeff", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.presentations.len(), 2);
    for p in &doc.presentations {
        assert_eq!(p.linking_matrix, vec![vec![-1, -2, -2], vec![-2, -4, -3], vec![-2, -3, -4]]);
        assert_eq!(p.det, 1);
    }

    let o = bin(&["convert", "--tb", "-3", "--rot", "2", "--coeff", "+1", "--format", "json"]);
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.presentations.len(), 1);
    assert_eq!(doc.presentations[0].linking_matrix, vec![vec![-2]]);

    let o = bin(&["convert", "--tb", "-1", "--rot", "0", "--coeff", "2", "--format", "json"]);
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.presentations[0].linking_matrix, vec![vec![0, -1], vec![-1, -3]]);
    assert_eq!(doc.presentations[0].det, -1);
}

#[test]
fn convert_with_signs_selects_one_branch() {
    let o = bin(&["convert", "--tb", "-2", "--rot", "-1", "--coeff", "3", "--signs", "-", "--format", "json"]);
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.presentations.len(), 1);
    assert_eq!(doc.presentations[0].components[1].rot, -2);
    let o = bin(&["convert", "--tb", "-2", "--rot", "-1", "--coeff", "3", "--signs", "+-"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn convert_reads_input_documents() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("diagram.json");
    std::fs::write(
        &path,
        r#"{"knot": {"type": "unknot", "tb": -2, "rot": -1}, "coefficient": 3, "signs": "+"}"#,
    )
    .unwrap();
    let o = bin(&["convert", "--input", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.presentations.len(), 1);
    assert_eq!(doc.presentations[0].signs, "+");

    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(bin(&["convert", "--input", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bin(&["convert", "--input", "/nonexistent/diagram.json"]).status.code(), Some(2));
}

#[test]
fn convert_invalid_inputs_exit_2() {
    for args in [
        vec!["convert", "--tb", "-2", "--rot", "0", "--coeff", "3"],
        vec!["convert", "--tb", "0", "--rot", "1", "--coeff", "3"],
        vec!["convert", "--tb", "-1", "--rot", "0", "--coeff", "0"],
        vec!["convert", "--tb", "-1", "--rot", "0", "--coeff", "1/0"],
        vec!["convert", "--tb", "-1", "--rot", "0"],
        vec!["frobnicate"],
    ] {
        assert_eq!(bin(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn analyze_examples() {
    let o = bin(&[
        "analyze", "--tb", "-2", "--rot", "-1", "--coeff", "3", "--lk", "1", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    let got: Vec<_> = doc
        .presentations
        .iter()
        .map(|p| {
            let e = p.external.as_ref().unwrap();
            (e.tb_new, e.rot_new, e.bennequin.satisfied)
        })
        .collect();
    assert_eq!(got, vec![(-2, 3, false), (-2, -1, true)]);

    let o = bin(&[
        "analyze", "--tb", "-2", "--rot", "-1", "--coeff", "3", "--lk", "0", "--ext-tb", "-3", "--ext-rot", "2",
        "--format", "json",
    ]);
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    for p in &doc.presentations {
        let e = p.external.as_ref().unwrap();
        assert_eq!((e.tb_new, e.rot_new), (-3, 2));
    }

    let o = bin(&[
        "analyze", "--tb", "-3", "--rot", "-2", "--coeff", "2", "--lk", "-1", "--format", "json",
    ]);
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.presentations.len(), 2);
    for p in &doc.presentations {
        assert_eq!(p.linking_matrix, vec![vec![-2, -3], vec![-3, -5]]);
        assert_eq!(p.external.as_ref().unwrap().tb_new, 0);
    }
}

#[test]
fn analyze_arithmetic_failures_exit_3() {
    let o = bin(&["analyze", "--tb", "-2", "--rot", "-1", "--coeff", "-1", "--lk", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("-2/3"));
    let o = bin(&["analyze", "--tb", "-1", "--rot", "0", "--coeff", "1", "--lk", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = bin(&["analyze", "--tb", "-1", "--rot", "0", "--coeff", "2", "--lk", "1", "--ext-tb", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_examples() {
    let o = bin(&["classify", "--m", "2", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: ClassifyDocument = serde_json::from_str(&stdout(&o)).unwrap();
    let r = &doc.reports[0];
    assert_eq!(r.collection, "C2");
    assert!(r.survives);
    assert_eq!(r.verdicts.iter().filter(|v| v.status == "consistent-with-standard-tight").count(), 1);

    let text = stdout(&bin(&["classify", "--m", "2", "--n", "3"]));
    assert!(text.contains("tight (asserted)"));

    let o = bin(&["classify", "--m", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("n = m ± 1"));
    assert_eq!(bin(&["classify", "--m", "0", "--n", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["classify", "--m", "3", "--n", "4", "--rot", "1"]).status.code(), Some(2));
}

#[test]
fn table_examples() {
    let o = bin(&["table", "--m-max", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: ClassifyDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.reports.len(), 10);
    for r in doc.reports.iter().filter(|r| r.collection == "C1") {
        assert!(!r.survives);
        assert!(r.verdicts.iter().all(|v| v.status == "overtwisted-certified"));
    }
    let o = bin(&["table", "--m-max", "0", "--format", "json"]);
    let doc: ClassifyDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.reports.is_empty());
    assert_eq!(bin(&["table", "--m-max", "-1"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["convert", "--tb", "-3", "--rot", "2", "--coeff", "-7/3", "--format", "json"],
        vec!["analyze", "--tb", "-2", "--rot", "-1", "--coeff", "3", "--lk", "1", "--format", "json"],
        vec!["table", "--m-max", "4", "--format", "json"],
        vec!["classify", "--m", "1", "--n", "0", "--format", "json"],
        vec!["table", "--m-max", "4"],
    ];
    for args in &cases {
        let a = bin(args);
        let b = bin(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        let text = stdout(&a);
        if args.contains(&"json") {
            let value: serde_json::Value = serde_json::from_str(&text).unwrap();
            assert!(no_decimal_points(&value));
            assert_eq!(value["schema_version"], 1);
            match args[0] {
                "convert" | "analyze" => assert_eq!(reemit::<ReportDocument>(&text), text),
                _ => assert_eq!(reemit::<ClassifyDocument>(&text), text),
            }
        }
    }
}

#[test]
fn schema_file_names_every_command() {
    let schema: serde_json::Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let text = schema.to_string();
    for cmd in ["expand", "convert", "analyze", "classify", "table"] {
        assert!(text.contains(&format!("\"{cmd}\"")), "{cmd}");
    }
    assert_eq!(schema["properties"]["schema_version"]["const"], 1);
}
