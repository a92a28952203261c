use std::io::Write;
use std::process::Command;

use ftau_cli::{parse_job, run_document};
use ftau_core::Ideal;

fn ftau(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_ftau"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap(),
    )
}

fn job_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn cusp_adjoint_from_flags() {
    let (out, _, code) = ftau(&["tau-along", "--p", "11", "x^3 + y^5"]);
    assert_eq!(code, 0);
    assert_eq!(out, "x^2\nx*y\ny^3\n");
}

#[test]
fn job_file_and_determinism() {
    let f = job_file("# cusp\nring p=7 vars=x,y\nideal I = x^3+y^5\ncmd tau-along I\n");
    let path = f.path().to_str().unwrap();
    let a = ftau(&["run", path]);
    let b = ftau(&["run", path]);
    assert_eq!(a.2, 0);
    assert_eq!(a.0, b.0);
}

#[test]
fn exit_codes() {
    assert_eq!(ftau(&["gb", "--p", "6", "x"]).2, 2);
    assert_eq!(ftau(&["gb", "--p", "5", "x3"]).2, 2);
    let (out, _, code) = ftau(&[
        "tau", "--p", "2", "--factor", "x@2", "--emax", "1", "--json",
    ]);
    assert_eq!(code, 3);
    assert_eq!(out.trim(), r#"{"error":"NotStabilized","e_max":1}"#);
    let (_, _, code) = ftau(&[
        "bracket",
        "--p",
        "7",
        "--e",
        "3",
        "--degree-limit",
        "100",
        "x",
    ]);
    assert_eq!(code, 5);
}

#[test]
fn restriction_json_schema() {
    let (out, _, code) = ftau(&["restrict", "--p", "5", "--seed", "3", "--json", "x^2 - y^3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in ["lhs", "rhs", "containment_holds", "equality_holds"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["containment_holds"], true);
}

#[test]
fn batch_mode_keeps_order() {
    let files: Vec<_> = [3u32, 5, 7, 11]
        .iter()
        .map(|p| {
            job_file(&format!(
                "ring p={p} vars=x,y\nideal I = x, y\ncmd bracket I\n"
            ))
        })
        .collect();
    let mut args = vec!["run", "--jobs", "3"];
    let paths: Vec<String> = files
        .iter()
        .map(|f| f.path().display().to_string())
        .collect();
    args.extend(paths.iter().map(String::as_str));
    let (out, _, code) = ftau(&args);
    assert_eq!(code, 0);
    let bodies: Vec<&str> = out.split("== ").filter(|s| !s.is_empty()).collect();
    for (body, p) in bodies.iter().zip([3, 5, 7, 11]) {
        assert!(body.contains(&format!("x^{p}\ny^{p}\n")), "{body}");
    }
}

#[test]
fn canonical_output_round_trips() {
    let text = "ring p=7 vars=x,y,z\nideal I = x*y - z^2, y^3 + x, x^2*z\ncmd gb I\n";
    let (out, code) = run_document(text, false);
    assert_eq!(code, 0);
    let gens: Vec<&str> = out.lines().collect();
    let again = format!(
        "ring p=7 vars=x,y,z\nideal I = {}\ncmd gb I\n",
        gens.join(", ")
    );
    assert_eq!(run_document(&again, false).0, out);
    let a = &parse_job(text).unwrap().args[0];
    let b = &parse_job(&again).unwrap().args[0];
    assert!(Ideal::equals(a, b).unwrap());
}

#[test]
fn parse_error_names_the_line() {
    let (out, code) = run_document("ring p=5 vars=x,y\n\nideal I = x +\ncmd gb I\n", true);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"], "ParseError");
    assert_eq!(v["line"], 3);
}
