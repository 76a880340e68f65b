use std::fs;

use hyperrho::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hyperrho").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn value(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
        .parse()
        .unwrap()
}

#[test]
fn extremal_reports_worked_example() {
    let (code, out, _) = call(&["extremal", "--m", "14", "--k", "3"]);
    assert_eq!(code, 0);
    assert!((value(&out, "theta0") - 0.35581).abs() < 5e-5);
    assert!((value(&out, "alpha") - 0.22084).abs() < 5e-5);
    assert!((value(&out, "rho") - 1.654396).abs() < 5e-6);
    assert!(out.contains("witnesses=C1(4,4,4),C2(4,4,4)"), "{out}");
}

#[test]
fn extremal_json_round_trips() {
    let (code, out, _) = call(&["extremal", "--m", "9", "--k", "4", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["m"], 9);
    assert!(v["rho"].as_f64().unwrap() > 1.0);
}

#[test]
fn loose_cycle_file_has_rho_cube_root_of_four() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c5.txt");
    let path = file.to_str().unwrap();
    let (code, _, err) = call(&["construct", "--family", "cycle", "--params", "5", "--k", "3", "--out", path]);
    assert_eq!(code, 0, "{err}");
    let (code, out, _) = call(&["rho", path]);
    assert_eq!(code, 0);
    assert!((value(&out, "rho") - 1.587401).abs() < 1e-6);
    assert!(value(&out, "gap") <= 1e-10);
}

#[test]
fn construct_then_rho_then_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c2.txt");
    let path = file.to_str().unwrap();
    assert_eq!(call(&["construct", "--family", "C2", "--params", "1,1,1", "--k", "3", "--out", path]).0, 0);
    let (code, first, _) = call(&["rho", path]);
    assert_eq!(code, 0);
    let rho = value(&first, "rho");
    assert!(rho.is_finite() && value(&first, "upper") - value(&first, "lower") <= 1e-10);
    assert_eq!(call(&["rho", path]).1, first, "repeated runs must agree");

    // reversing the edge lines does not change the answer
    let text = fs::read_to_string(&file).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines[1..].reverse();
    fs::write(&file, lines.join("\n")).unwrap();
    assert_eq!(value(&call(&["rho", path]).1, "rho"), rho);

    let (code, out, _) = call(&["certificate", path]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("classification=alpha_normal"));
    assert!(out.contains("consistent=true"));
}

#[test]
fn construct_to_stdout() {
    let (code, out, _) = call(&["construct", "--family", "path", "--params", "2", "--k", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "3 5 2\n0 1 3\n1 2 4\n");
}

#[test]
fn mobius_orbit_and_table() {
    let (code, out, _) = call(&["mobius", "--alpha", "0.2", "--x0", "0.5", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("kind=increasing_to_r1"), "{out}");
    assert_eq!(out.lines().filter(|l| l.contains('\t')).count(), 6);

    let (code, out, _) = call(&["mobius", "--alpha", "0.2", "--table", "f0star", "--range", "-1..1", "--step", "0.5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 6, "{out}");
}

#[test]
fn sweep_table_is_sorted() {
    let (code, out, _) = call(&["sweep", "--m", "8", "--k", "3", "--family", "C1"]);
    assert_eq!(code, 0);
    let first = out.lines().nth(1).unwrap();
    assert!(first.starts_with("C1(2,2,2)"), "{out}");
    let (code, out, _) = call(&["sweep", "--m", "9", "--k", "4", "--family", "C3", "--json"]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(!rows.as_array().unwrap().is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(call(&[]).0, 2);
    assert_eq!(call(&["rho"]).0, 2);
    assert_eq!(call(&["extremal", "--m", "14", "--k", "3", "--bogus"]).0, 2);
    assert_eq!(call(&["construct", "--family", "wheel", "--params", "3", "--k", "3"]).0, 2);
    assert_eq!(call(&["mobius", "--alpha", "0.2", "--x0", "0.5"]).0, 2);
    assert_eq!(call(&["rho", "/nonexistent/file.txt"]).0, 1);
    assert_eq!(call(&["construct", "--family", "C3", "--params", "1,1", "--k", "3"]).0, 1);
    assert_eq!(call(&["sweep", "--m", "40", "--k", "3", "--family", "C2", "--cap", "5"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn quick_suite_passes() {
    let (code, out, _) = call(&["verify", "--suite", "quick"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("passed=9/9"));
}
