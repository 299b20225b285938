use std::io::Write;

use serde_json::Value;
use skein::bracket::jones;
use skein::homflypt::homflypt;
use skein::{LaurentPoly, LinkDiagram};

const TREFOIL: &str = "X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)";
const CORPUS: &str = include_str!("../../core/data/corpus.pd");

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("skein").chain(args.iter().copied());
    let code = skein_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn file_with(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn jones_json_round_trips() {
    let v = json(&["jones", "--pd", TREFOIL]);
    assert_eq!(v["invariant"], "jones");
    assert!(v["error"].is_null());
    let p: LaurentPoly = serde_json::from_value(v["value"].clone()).unwrap();
    let t = |e: i32, c: i64| LaurentPoly::monomial(&["t"], &[e], c);
    assert_eq!(p, &(&t(-1, 1) + &t(-3, 1)) + &t(-4, -1));
    let a_form = jones(&LinkDiagram::parse(TREFOIL, 0).unwrap()).into_poly().unwrap();
    assert_eq!(p.to_string(), skein::bracket::jones_in_t(&a_form).unwrap().to_string());
}

#[test]
fn spot_values() {
    assert_eq!(json(&["tl", "dim", "3"]), 5);
    assert_eq!(json(&["tl", "annular-count", "3"]), 20);
    assert_eq!(json(&["colorings", "-p", "3", "--pd", TREFOIL])["value"], 9);
    let (code, out, _) =
        run(&["--format", "text", "colorings", "-p", "5", "--pd", "X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)"]);
    assert_eq!((code, out.trim()), (0, "25"));
    assert_eq!(json(&["vassiliev", "--pd", TREFOIL, "--crossings", "0,1,2"])["value"], 0);
    let c = json(&["col3-check", "--pd", TREFOIL]);
    assert_eq!((c["value"]["lhs"].clone(), c["value"]["rhs"].clone()), (9.into(), 9.into()));
    let (code, out, _) = run(&["--format", "text", "bracket", "--pd", "U2;", "--verify"]);
    assert_eq!((code, out.trim()), (0, "-A^2 - A^-2"));
    let (_, out, _) = run(&["--format", "text", "jones", "--pd", "U0;"]);
    assert_eq!(out.trim(), "empty");
}

#[test]
fn algebra_subcommands() {
    let (code, out, _) = run(&["--format", "text", "tl", "mul", "[(1,2),(3,4)]", "[(1,2),(3,4)]"]);
    assert_eq!((code, out.trim()), (0, "(-A^2 - A^-2)·[(1,2),(3,4)]"));
    let q = json(&["torus", "reduce", "yx"]);
    assert_eq!(q["terms"].as_array().unwrap().len(), 2);
    let closed = json(&["torus", "reduce", "--closed", "xyz"]);
    assert!(closed["terms"].as_array().unwrap().iter().all(|t| t["monomial"] != serde_json::json!([1, 1, 1])));
    let w = json(&["wperm", "normal", "-n", "4", "t s1 s2 s3 s3 s2 s1"]);
    assert_eq!(w["normal_word"], "t");
    let h = json(&["hecke", "mul", "-n", "2", "g1", "g1"]);
    assert_eq!(h["terms"].as_array().unwrap().len(), 2);
    let s = json(&["skein2", "--h1-free", "1", "--h2", "1", "--pairing", "1", "--bound", "3"]);
    let table = s["table"].as_array().unwrap();
    assert_eq!(table.len(), 7);
    for row in table {
        assert_eq!(row["mul"].as_i64().unwrap(), row["free"][0].as_i64().unwrap().abs());
    }
    let z = json(&["skein2", "--h1-free", "2", "--torsion", "2", "--h2", "1"]);
    assert!(z["table"].as_array().unwrap().iter().all(|r| r["module"] == "Z[q^±1]"));
}

#[test]
fn input_errors_exit_one() {
    let (code, _, err) = run(&["nosuch"]);
    assert_eq!(code, 1);
    assert!(err.contains("Usage"));
    let (code, _, err) = run(&["bracket", "--pd", "X(1,4,2,5),X(3,6,4"]);
    assert_eq!(code, 1);
    assert!(err.contains("column 19"), "{err}");
    assert_eq!(run(&["colorings", "-p", "4", "--pd", TREFOIL]).0, 1);
    assert_eq!(run(&["vassiliev", "--pd", TREFOIL, "--crossings", "0,0"]).0, 1);
    assert_eq!(run(&["tl", "mul", "[(1,3),(2,4)]", "[(1,2),(3,4)]"]).0, 1);
    assert_eq!(run(&["torus", "reduce", "xw"]).0, 1);
    assert_eq!(run(&["bracket", "--strategy", "magic", "--pd", TREFOIL]).0, 1);
    assert_eq!(run(&["jones", "/nonexistent/links.pd"]).0, 1);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("col3-check"));
}

#[test]
fn batch_keeps_order_and_reports_bad_lines() {
    let f = file_with(&format!("# three diagrams\n{TREFOIL}\nU1;\nX(1,3,2,4),X(3,1,4,2)\n"));
    let v = json(&["homflypt", f.path().to_str().unwrap()]);
    let recs = v.as_array().unwrap();
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[0]["input"], TREFOIL);
    assert_eq!(recs[1]["input"], "U1;");
    assert!(recs.iter().all(|r| r["error"].is_null()));

    let f = file_with(&format!("{TREFOIL}\nX(1,2,3\nU2;\n"));
    let (code, out, _) = run(&["conway", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    let recs: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(recs.len(), 3);
    assert!(recs[0]["error"].is_null() && recs[2]["error"].is_null());
    assert!(recs[1]["value"].is_null());
    assert!(recs[1]["error"].as_str().unwrap().contains("parse error"));

    let f = file_with("");
    assert_eq!(json(&["jones", f.path().to_str().unwrap()]), serde_json::json!([]));
}

#[test]
fn text_and_json_agree_on_corpus() {
    let f = file_with(CORPUS);
    let path = f.path().to_str().unwrap();
    for inv in ["bracket", "jones", "homflypt", "conway"] {
        let recs = json(&[inv, path]);
        let (code, text, _) = run(&["--format", "text", inv, path]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = text.lines().collect();
        let recs = recs.as_array().unwrap();
        assert_eq!(recs.len(), lines.len());
        for (r, line) in recs.iter().zip(&lines) {
            let (input, value) = line.split_once(" => ").unwrap();
            assert_eq!(r["input"], input);
            let shown = match &r["value"] {
                Value::String(s) => s.clone(),
                v => serde_json::from_value::<LaurentPoly>(v.clone()).unwrap().to_string(),
            };
            assert_eq!(shown, value, "{inv} on {input}");
        }
    }
}

#[test]
fn batch_values_match_library() {
    let f = file_with(CORPUS);
    let recs = json(&["homflypt", f.path().to_str().unwrap()]);
    let expected: Vec<LaurentPoly> = CORPUS
        .lines()
        .filter_map(|l| LinkDiagram::from_line(l).unwrap())
        .map(|d| homflypt(&d).into_poly().unwrap())
        .collect();
    let got: Vec<LaurentPoly> =
        recs.as_array().unwrap().iter().map(|r| serde_json::from_value(r["value"].clone()).unwrap()).collect();
    assert_eq!(got, expected);
    let checks = json(&["col3-check", f.path().to_str().unwrap()]);
    assert!(checks.as_array().unwrap().iter().all(|r| r["value"]["holds"] == true));
}
