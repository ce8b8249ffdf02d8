use std::process::{Command, Output};

use serde_json::Value;

use g2convex::{convexity_of_vertices, Convexity, Point};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2convex")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(v["schema"], 1);
    v
}

#[test]
fn scan_csv_flags_sixteen_symbols() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let out = run(&["h2", "scan", "--from", "5", "--to", "199", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().unwrap().clone();
    let col = headers.iter().position(|h| h == "has_strictly_convex").unwrap();
    let flagged = reader.records().filter(|r| &r.as_ref().unwrap()[col] == "false").count();
    assert_eq!(flagged, 16);
}

#[test]
fn scan_convex_lists_eight_symbols() {
    let out = run(&["h2", "scan", "--from", "5", "--to", "199", "--convex", "--format", "json"]);
    let flagged = json(&out)["data"]["flagged"].as_array().unwrap().clone();
    let symbols: Vec<&str> = flagged.iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(symbols, ["5", "12", "17_1", "21", "32", "41_0", "45", "77"]);
}

#[test]
fn empty_scan_has_only_a_header() {
    let out = run(&["h2", "scan", "--from", "7", "--to", "7", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn output_is_identical_across_worker_counts() {
    let one = run(&["h2", "scan", "--from", "5", "--to", "80", "--format", "json", "--workers", "1"]);
    let many = Command::new(env!("CARGO_BIN_EXE_g2convex"))
        .args(["h2", "scan", "--from", "5", "--to", "80", "--format", "json"])
        .env("G2CONVEX_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(
        one.stdout,
        run(&["h2", "scan", "--from", "5", "--to", "80", "--format", "json", "--workers", "1"]).stdout
    );
}

fn vertices(v: &Value) -> Vec<Point> {
    serde_json::from_value(v.clone()).expect("exact vertices")
}

#[test]
fn poly_json_round_trips_the_verdict() {
    for (args, strict) in [(["13", "1", "3", "1", "-1"], true), (["12", "1", "3", "1", "0"], false)] {
        let mut all = vec!["h2", "poly"];
        all.extend(args);
        all.extend(["--format", "json"]);
        let v = json(&run(&all));
        let oct = &v["data"]["octagon"];
        assert_eq!(oct["strictly_convex"], strict);
        let recomputed = convexity_of_vertices(&vertices(&oct["vertices"])) == Convexity::Strict;
        assert_eq!(recomputed, strict);
    }
}

#[test]
fn poly_renders_svg_and_notes_degeneracy() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.svg");
    let out = run(&["h2", "poly", "13", "1", "3", "1", "-1", "--svg", path.to_str().unwrap()]);
    assert!(stdout(&out).contains("(x1, y1) = (0.3028, 2.0000)"));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 2);
    let out = run(&["h2", "poly", "9", "0", "2", "1", "-1", "--svg", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("degenerate"));
    assert_eq!(std::fs::read_to_string(&path).unwrap().matches("<polygon").count(), 1);
}

#[test]
fn h11_check_reports_strict_convexity() {
    let out = run(&["h11", "check", "12", "0", "3", "1", "0", "0.9", "0.2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim_end().ends_with("STRICTLY CONVEX"));
    assert!(!stdout(&out).contains("NOT"));
}

#[test]
fn h11_search_hits_round_trip() {
    let v = json(&run(&["h11", "search", "12", "--nx", "10", "--ny", "10", "--format", "json"]));
    let hits = v["data"]["hits"].as_array().unwrap();
    assert!(!hits.is_empty());
    for hit in hits {
        assert_eq!(convexity_of_vertices(&vertices(&hit["decagon"]["vertices"])), Convexity::Strict);
    }
    let out = run(&["h11", "search", "9", "--nx", "8", "--ny", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 hits"));
}

#[test]
fn split_rejects_large_epsilon() {
    let ok = run(&["h11", "split", "13", "1", "3", "1", "-1", "--eps", "1/10"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("STRICTLY CONVEX decagon"));
    let bad = run(&["h11", "split", "13", "1", "3", "1", "-1", "--eps", "1/2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("exceeds"));
}

#[test]
fn bigd_sweep_passes() {
    let out = run(&["bigd", "sweep", "--from", "200", "--to", "400"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim_end().ends_with("PASS"));
    let csv_out = run(&["bigd", "sweep", "--from", "200", "--to", "210", "--format", "csv"]);
    assert!(stdout(&csv_out).starts_with("D,scheme,a,b,c,e,k,l,convex,spin,inequalities"));
}

#[test]
fn certificate_exit_codes() {
    assert_eq!(run(&["cert", "octagons", "--box", "6"]).status.code(), Some(0));
    assert_eq!(run(&["cert", "case1", "--range", "20"]).status.code(), Some(0));
    assert_eq!(run(&["cert", "pentagons", "--area", "4", "--box", "6"]).status.code(), Some(0));
    // the area-4 pentagon lies below the bound of 5
    let five = run(&["cert", "pentagons", "--area", "5", "--box", "6", "--format", "json"]);
    assert_eq!(five.status.code(), Some(2));
    assert_eq!(json(&five)["data"]["count"], 1);
    let min = run(&["cert", "min-area", "4"]);
    assert!(stdout(&min).contains("minimal area 1"));
}

#[test]
fn usage_and_input_errors_exit_one() {
    assert_eq!(run(&["h2", "poly", "13", "1"]).status.code(), Some(1));
    assert_eq!(run(&["h2", "poly", "13", "1", "2", "1", "-1"]).status.code(), Some(1));
    assert_eq!(run(&["h2", "scan", "--from", "3", "--to", "10"]).status.code(), Some(1));
    assert_eq!(run(&["bigd", "sweep", "--from", "100", "--to", "300"]).status.code(), Some(1));
    assert_eq!(run(&["h11", "check", "12", "0", "3", "1", "0", "9", "0.2"]).status.code(), Some(1));
}
