use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abelian-ideals")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invalid_type_is_a_usage_error() {
    let o = run(&["verify", "X9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("X9"));
    assert_eq!(run(&["info", "D3"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_g2_succeeds() {
    let o = run(&["verify", "G2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("G2: 29/29 checks passed"));
}

#[test]
fn verify_json_reports_every_check() {
    let o = run(&["verify", "B3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["type"], "B3");
    assert_eq!(v["passed"], true);
    assert_eq!(v["num_ideals"], 8);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["passed"] == true && c["name"].is_string()));
}

#[test]
fn ideals_json_schema() {
    let o = run(&["ideals", "G2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["type"], "G2");
    let ideals = v["ideals"].as_array().unwrap();
    assert_eq!(ideals.len(), 4);
    assert_eq!(ideals[0]["dim"], 0);
    assert!(ideals[0]["param"].is_null());
    for a in &ideals[1..] {
        assert_eq!(a["roots"].as_array().unwrap().len() as u64, a["dim"].as_u64().unwrap());
        assert!(a["param"]["phi"].is_array());
        assert!(a["param"]["coset_word"].is_array());
        assert_eq!(a["param"]["phi"], a["assoc_long_root"]);
    }
}

#[test]
fn hasse_dot_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a2.dot");
    let o = run(&["hasse", "A2", "--dot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph hasse_A2 {\n"));
    assert!(dot.trim_end().ends_with('}'));
    assert_eq!(dot.matches(" -- ").count(), 3);
    assert_eq!(dot.matches("[dim=").count(), 4);
    assert!(dot.contains("  0 -- 1 [label=\"0\"];"));
    let piped = run(&["hasse", "A2", "--dot", "-"]);
    assert_eq!(stdout(&piped), dot);
}

#[test]
fn young_rim_code_example() {
    let o = run(&["young", "11", "--encode", "5,4,4,4,4,3,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1697 11010100001");
    let d = run(&["young", "11", "--decode", "1697"]);
    assert_eq!(stdout(&d).trim(), "(5,4,4,4,4,3,2)");
    assert_eq!(run(&["young", "3", "--encode", "4"]).status.code(), Some(2));
}

#[test]
fn young_list_has_all_diagrams() {
    let o = run(&["young", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 8);
}

#[test]
fn golden_passes() {
    let o = run(&["golden"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed: true"));
}

#[test]
fn output_is_deterministic() {
    for args in [&["ideals", "D4", "--json"][..], &["hasse", "C3", "--dot", "-"], &["tables"]] {
        assert_eq!(stdout(&run(args)), stdout(&run(args)), "{args:?}");
    }
}

#[test]
fn info_prints_cartan_matrix() {
    let o = run(&["info", "G2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("    2 -1\n   -3  2"));
    assert!(s.contains("highest root: [3, 2]"));
}
