use std::process::{Command, Output};

fn idealis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealis"))
        .args(args)
        .env("IDEALIS_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const EXAMPLE: &str = "x1_1^2*x1_2*x2_1\nx1_2*x1_3*x2_2^2\nx1_3*x2_1^2\n";

#[test]
fn closure_of_three_generator_ideal() {
    let o = idealis(&["closure", EXAMPLE]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "x1_3*x2_1^2\nx1_1^2*x1_2*x2_1\nx1_2*x1_3*x2_1*x2_2\nx1_2*x1_3*x2_2^2\n\
         generators: 4\nintegrally closed: false\nadded: x1_2*x1_3*x2_1*x2_2\n"
    );
}

#[test]
fn closure_json_from_file() {
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), EXAMPLE).unwrap();
    let arg = format!("@{}", file.path().display());
    let o = idealis(&["closure", &arg, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["closure"].as_array().unwrap().len(), 4);
    assert_eq!(v["was_closed"], false);
}

#[test]
fn closure_of_graph() {
    let o = idealis(&[
        "closure",
        "--graph",
        r#"{"blocks":[2,2,2],"edges":"complete","loops":"all"}"#,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("generators: 21\n"));
}

#[test]
fn principal_ideal_is_closed() {
    let o = idealis(&["closure", "x1_1^2*x2_1"]);
    assert_eq!(
        stdout(&o),
        "x1_1^2*x2_1\ngenerators: 1\nintegrally closed: true\n"
    );
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = [
        "invariants",
        "--graph",
        r#"{"blocks":[2,1],"edges":"complete","loops":"all"}"#,
        "--target",
        "closure",
        "--json",
    ];
    assert_eq!(idealis(&args).stdout, idealis(&args).stdout);
    let sweep = ["verify", "--m", "1,2", "--json"];
    assert_eq!(idealis(&sweep).stdout, idealis(&sweep).stdout);
}

#[test]
fn invariants_of_closure_and_cover() {
    let o = idealis(&[
        "invariants",
        "--graph",
        r#"{"blocks":[3,3],"edges":"complete","loops":"all"}"#,
        "--target",
        "closure",
        "--class",
        "strong-quasi-closure",
    ]);
    let t = stdout(&o);
    for line in ["dim: 0 ", "projdim: 6 ", "depth: 0 ", "reg: 1 ", "type: 6 "] {
        assert!(t.contains(line), "{line} missing in\n{t}");
    }
    let o = idealis(&[
        "invariants",
        "--graph",
        r#"{"blocks":[2,2],"edges":"complete","loops":"all"}"#,
        "--target",
        "cover",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for (k, want) in [("dim", 3), ("projdim", 1), ("depth", 3), ("reg", 3)] {
        assert_eq!(v[k]["value"], want, "{k}");
    }
    let o = idealis(&["invariants", "x1_1", "--class", "principal"]);
    let t = stdout(&o);
    assert!(t.contains("dim: 0 ") && t.contains("projdim: 1 "));
}

#[test]
fn unavailable_fields_are_marked() {
    let o = idealis(&["invariants", "x1_1*x2_1\nx1_2*x2_2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("projdim: n/a (no supported route)"));
}

#[test]
fn csv_rows_append() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inv.csv");
    let p = path.to_str().unwrap();
    for name in ["first", "second"] {
        let o = idealis(&["invariants", "x1_1", "--csv", p, "--name", name]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "instance,M,height,bight,dim,depth,projdim,reg,type,betti"
    );
    assert_eq!(
        &lines[1..],
        ["first,1,1,1,0,0,1,0,1,1", "second,1,1,1,0,0,1,0,1,1"]
    );
}

#[test]
fn cover_ideal_of_strong_quasi_graph() {
    let o = idealis(&[
        "cover-ideal",
        "--graph",
        r#"{"blocks":[2,1],"edges":"complete","loops":"all"}"#,
    ]);
    assert_eq!(
        stdout(&o),
        "cover: {x1_1, x1_2, x2_1}\ncover ideal: (x1_1*x1_2*x2_1)\n"
    );
}

#[test]
fn oracle_reports_least_power() {
    let o = idealis(&["oracle", "x1_1*x1_2", "x1_1^2\nx1_2^2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["k"], 2);
    let o = idealis(&["oracle", "x1_1", "x1_1^2\nx1_2^2", "--k-max", "3"]);
    assert_eq!(stdout(&o), "inconclusive: no k <= 3 with f^k in I^k\n");
}

#[test]
fn verify_default_sweep_passes() {
    let o = idealis(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("failed: 0\n"));
}

#[test]
fn verify_boundary_and_failures() {
    let o = idealis(&[
        "verify",
        "--n",
        "2,3,4",
        "--m",
        "1",
        "--checks",
        "closedness-boundary",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(),
        3
    );
    // consecutive adjacency leaves x1_1*x3_1 out of I(G) for three blocks
    let o = idealis(&[
        "verify",
        "--n",
        "3",
        "--m",
        "1",
        "--checks",
        "closedness-boundary",
        "--adjacent-only",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("instance: {\"blocks\":[1,1,1]"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    for args in [
        &["verify", "--checks", ""][..],
        &["verify", "--checks", "nonsense"],
        &["closure", "x1_1*y1_2"],
        &["closure", ""],
        &["closure", "--graph", "{not json"],
        &["invariants", "x1_1", "--target", "cover"],
        &["invariants", "x1_1*x2_1\nx1_2*x2_2", "--class", "principal"],
        &["bogus"],
        &["closure"],
    ] {
        let o = idealis(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    let o = idealis(&["closure", "x1_1\nx1_2^q"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}
