#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::path::PathBuf;
use std::process::{Command, Output};

use rainbow_core::graph::dimacs::write_dimacs;
use rainbow_core::graph::edge_list::write_orientation;
use rainbow_core::graph::{generate, Family};
use rainbow_core::Orientation;
use serde_json::Value;
use tempfile::TempDir;

fn rainbow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, text: &str) -> String {
        let path: PathBuf = self.0.path().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    }

    fn family(&self, name: &str, family: Family) -> String {
        self.write(name, &write_dimacs(&generate(&family).unwrap()))
    }

    fn path(&self, name: &str) -> String {
        self.0.path().join(name).to_string_lossy().into_owned()
    }
}

#[test]
fn chromatic_numbers() {
    let files = Files::new();
    let c5 = files.family("cycle5.col", Family::Cycle(5));
    let out = rainbow(&["chromatic", &c5, "--circular"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!((v["chi_c"]["n"].as_u64(), v["chi_c"]["d"].as_u64()), (Some(5), Some(2)));
    assert_eq!(v["witness"].as_array().unwrap().len(), 5);

    let k4 = files.family("k4.col", Family::Complete(4));
    assert_eq!(json(&rainbow(&["chromatic", &k4]))["chi"], 4);

    let edges = files.write("c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
    assert_eq!(json(&rainbow(&["chromatic", &edges]))["chi"], 3);
    let forced = files.write("c5.graph", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    assert_eq!(json(&rainbow(&["chromatic", &forced, "--format", "dimacs"]))["chi"], 3);
}

#[test]
fn bad_input_exits_two() {
    let files = Files::new();
    let empty = files.write("empty.col", "");
    let out = rainbow(&["chromatic", &empty]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(!stderr(&out).is_empty());
    assert_eq!(code(&rainbow(&["chromatic", &files.path("missing.col")])), 2);
    assert_eq!(code(&rainbow(&["chromatic"])), 2);
    assert_eq!(code(&rainbow(&["color", &empty, "--theorem", "5"])), 2);
}

#[test]
fn theorem1_on_c5() {
    let files = Files::new();
    let c5 = files.family("cycle5.col", Family::Cycle(5));
    let out = rainbow(&["color", &c5, "--theorem", "1"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["theorem"], 1);
    assert_eq!(v["k"], 3);
    let colors: Vec<usize> = serde_json::from_value(v["coloring"].clone()).unwrap();
    assert_eq!(colors, vec![1, 2, 3, 1, 2]);
    assert_eq!(v["verified"]["lies_on"], true);
    assert!(v["trace"]["trace"]["stages"].is_array());
}

#[test]
fn hypothesis_violations_exit_two() {
    let files = Files::new();
    let c5 = files.family("cycle5.col", Family::Cycle(5));
    let out = rainbow(&["color", &c5, "--theorem", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("no cycle of length 3"));

    let k4 = files.family("k4.col", Family::Complete(4));
    let out = rainbow(&["color", &k4, "--theorem", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("chi_c equals chi: Theorem 2 inapplicable"));

    let out = rainbow(&["color", &k4, "--theorem", "3", "--cycle", "0,1,2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("cycle"));

    let out = rainbow(&["color", &k4, "--theorem", "4"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--orientation"));
}

#[test]
fn wheel_theorem3_with_explicit_cycle() {
    let files = Files::new();
    let w5 = files.family("wheel5.col", Family::Wheel(5));
    for args in [vec![], vec!["--cycle", "0,1,2,5"]] {
        let mut full = vec!["color", w5.as_str(), "--theorem", "3"];
        full.extend(args);
        let out = rainbow(&full);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        let v = json(&out);
        assert_eq!(v["verified"]["begins_count"], 6);
    }
}

#[test]
fn theorem4_with_orientation() {
    let files = Files::new();
    let c5 = files.family("cycle5.col", Family::Cycle(5));
    let arcs = files.write("arcs.txt", "0 1\n2 1\n2 3\n4 3\n4 0\n");
    let out = rainbow(&["color", &c5, "--theorem", "4", "--orientation", &arcs]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["witnesses"][0], serde_json::json!([4, 0, 1]));
    assert_eq!(v["trace"]["decomposition"]["case"], "layered");

    let bad = files.write("bad.txt", "0 1\n");
    assert_eq!(code(&rainbow(&["color", &c5, "--theorem", "4", "--orientation", &bad])), 2);
}

#[test]
fn verify_modes() {
    let files = Files::new();
    let c5 = files.family("cycle5.col", Family::Cycle(5));
    let good = files.write("good.txt", "0 1\n1 2\n2 3\n3 1\n4 2\n");
    assert_eq!(code(&rainbow(&["verify", &c5, &good, "--mode", "lies_on"])), 0);

    // (1,2,1,2,3): proper; the brute-force oracle decides the verdict
    let other = files.write("other.json", r#"{"colors": [1, 2, 1, 2, 3]}"#);
    let (begins, lies_on) = oracle::naive_rainbow(&generate(&Family::Cycle(5)).unwrap(), &[1, 2, 1, 2, 3], 3);
    for (mode, verdicts) in [("lies_on", lies_on), ("begins", begins)] {
        let out = rainbow(&["verify", &c5, &other, "--mode", mode]);
        let expected = if verdicts.iter().all(|&b| b) { 0 } else { 1 };
        assert_eq!(code(&out), expected, "{mode}");
        assert_eq!(json(&out)["report"][mode], serde_json::json!(verdicts));
    }

    let short = files.write("short.txt", "0 1\n1 2\n");
    let out = rainbow(&["verify", &c5, &short, "--mode", "lies_on"]);
    assert_eq!(code(&out), 2);
    let improper = files.write("improper.txt", "0 1\n1 1\n2 2\n3 1\n4 2\n");
    let out = rainbow(&["verify", &c5, &improper, "--mode", "lies_on"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("edge {0, 1}"));

    let layered = files.write("arcs.txt", "0 1\n2 1\n2 3\n4 3\n4 0\n");
    let out = rainbow(&["verify", &c5, &good, "--mode", "directed", "--orientation", &layered]);
    assert_eq!(code(&out), 1);
    let rainbow_coloring = files.write("r.txt", "0 2\n1 1\n2 2\n3 1\n4 3\n");
    let out = rainbow(&["verify", &c5, &rainbow_coloring, "--mode", "directed", "--orientation", &layered]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["witness"], serde_json::json!([4, 0, 1]));
}

/// Every exit-0 `color` output verifies with `verify`.
#[test]
fn color_output_round_trips_through_verify() {
    let files = Files::new();
    let cases = [
        (Family::Cycle(7), "1", "lies_on"),
        (Family::Wheel(6), "1", "lies_on"),
        (Family::Petersen, "1", "lies_on"),
        (Family::Complete(5), "3", "begins"),
        (Family::Wheel(7), "3", "begins"),
        (Family::Mycielski(Box::new(Family::Cycle(5))), "1", "lies_on"),
    ];
    for (i, (family, theorem, mode)) in cases.into_iter().enumerate() {
        let graph = files.family(&format!("g{i}.col"), family);
        let out = rainbow(&["color", &graph, "--theorem", theorem]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        let colored = files.write(&format!("c{i}.json"), &String::from_utf8(out.stdout).unwrap());
        assert_eq!(code(&rainbow(&["verify", &graph, &colored, "--mode", mode])), 0);
    }

    let c9 = files.family("c9.col", Family::Cycle(9));
    let out = rainbow(&["color", &c9, "--theorem", "2"]);
    assert_eq!(code(&out), 0);
    let strong: Vec<usize> = serde_json::from_value(json(&out)["trace"]["strong_set"].clone()).unwrap();
    assert!(!strong.is_empty());
    let colored = files.write("c9.json", &String::from_utf8(out.stdout).unwrap());
    let begins = json(&rainbow(&["verify", &c9, &colored, "--mode", "begins"]))["report"]["begins"].clone();
    assert!(strong.iter().all(|&v| begins[v] == true));

    let petersen = generate(&Family::Petersen).unwrap();
    let graph = files.family("petersen.col", Family::Petersen);
    for mask in [0u64, 0x5555, 0x7fff] {
        let arcs = files.write("p.txt", &write_orientation(&Orientation::from_mask(petersen.clone(), mask)));
        let out = rainbow(&["color", &graph, "--theorem", "4", "--orientation", &arcs]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        let colored = files.write("pc.json", &String::from_utf8(out.stdout).unwrap());
        let out = rainbow(&["verify", &graph, &colored, "--mode", "directed", "--orientation", &arcs]);
        assert_eq!(code(&out), 0);
    }
}

#[test]
fn outputs_are_byte_stable() {
    let files = Files::new();
    let graph = files.family("w.col", Family::Wheel(7));
    let a = rainbow(&["color", &graph, "--theorem", "3"]);
    let b = rainbow(&["color", &graph, "--theorem", "3"]);
    assert_eq!(a.stdout, b.stdout);
    let cfg =
        files.write("cfg.json", r#"{"max_vertices": 4, "random": {"count": 5, "min_vertices": 6, "max_vertices": 8}}"#);
    let (x, y) = (files.path("x.jsonl"), files.path("y.jsonl"));
    let a = rainbow(&["sweep", &cfg, "--out", &x, "--seed", "11"]);
    let b = rainbow(&["sweep", &cfg, "--out", &y, "--seed", "11"]);
    assert_eq!((code(&a), code(&b)), (0, 0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&x).unwrap(), std::fs::read(&y).unwrap());
}

#[test]
fn sweeps() {
    let files = Files::new();
    let default = files.write("default.json", "{}");
    let out_path = files.path("default.jsonl");
    let out = rainbow(&["sweep", &default, "--out", &out_path]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let summary = json(&out);
    assert_eq!(summary["begins_everywhere_colorings"], 0);
    assert_eq!(summary["counters"]["fail"], 0);
    let records = std::fs::read_to_string(&out_path).unwrap();
    let graphs = summary["counters"]["graphs"].as_u64().unwrap();
    // five per-graph checks plus the two c7_exception records
    assert_eq!(records.lines().count() as u64, graphs * 5 + 2);

    let zero = files.write("zero.json", r#"{"checks": ["theorem3"], "budget_ms": 0}"#);
    let zero_out = files.path("zero.jsonl");
    let out = rainbow(&["sweep", &zero, "--out", &zero_out]);
    assert_eq!(code(&out), 0);
    for line in std::fs::read_to_string(&zero_out).unwrap().lines() {
        let record: Value = serde_json::from_str(line).unwrap();
        assert_eq!(record["status"], "skipped", "{line}");
    }

    let bad = files.write("bad.json", r#"{"max_vertices": 9}"#);
    assert_eq!(code(&rainbow(&["sweep", &bad, "--out", &files.path("b.jsonl")])), 2);
    let garbage = files.write("garbage.json", "not json");
    assert_eq!(code(&rainbow(&["sweep", &garbage, "--out", &files.path("g.jsonl")])), 2);

    let search = files.write(
        "search.json",
        r#"{"max_vertices": 0, "families": [{"cycle": 7}, {"complete": 4}], "checks": ["theorem1"], "counterexample_search": true}"#,
    );
    let out = rainbow(&["sweep", &search, "--out", &files.path("s.jsonl")]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["counterexample_search"]["known_exception"]["k"], 3);
    assert!(v["counterexample_search"]["counterexample"].is_null());
}
