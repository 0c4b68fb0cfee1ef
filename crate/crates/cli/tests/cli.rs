use std::path::Path;
use std::process::{Command, Output};

use serde::Deserialize;
use wigner_moments::annular::AnnulusShape;
use wigner_moments::formulas::{finite_n_expansion, moment_theorem1};
use wigner_moments::poly::BetaPoly;

fn wigner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wigner")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = wigner(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

#[derive(Deserialize)]
struct MomentRecord {
    orders: Vec<usize>,
    alpha: BetaPoly,
}

#[derive(Deserialize)]
#[allow(non_snake_case)]
struct McRecord {
    orders: Vec<usize>,
    N: usize,
    samples: usize,
    estimate: f64,
    stderr: f64,
    exactGUEorLawValue: f64,
    zscore: f64,
}

#[test]
fn moments_json_matches_reference_output() {
    assert_eq!(stdout(&["moments", "--orders", "2", "--format", "json"]), "{\"orders\":[2],\"alpha\":\"b2\"}\n");
}

#[test]
fn moments_json_round_trips() {
    for orders in [vec![4], vec![2, 2], vec![1, 3], vec![2, 2, 2], vec![1, 1, 2, 2]] {
        let arg = orders.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",");
        let rec: MomentRecord = serde_json::from_str(&stdout(&["moments", "--orders", &arg, "--format", "json"])).unwrap();
        assert_eq!(rec.orders, orders);
        assert_eq!(rec.alpha, moment_theorem1(&AnnulusShape::new(orders).unwrap()).unwrap());
    }
}

#[test]
fn moments_csv_and_text_agree() {
    let text = stdout(&["moments", "--orders", "2,2"]);
    let csv = stdout(&["moments", "--orders", "2,2", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let row = reader.records().next().unwrap().unwrap();
    assert_eq!(&row[0], "2,2");
    assert_eq!(format!("{}\n", &row[1]), text);
}

#[test]
fn cumulant_table_matches_golden() {
    assert_eq!(stdout(&["cumulants", "--max-r", "4", "--max-order", "8"]), golden("cumulants.txt"));
}

#[test]
fn obstruction_listing_matches_golden() {
    assert_eq!(stdout(&["enumerate", "an", "--n", "4"]), golden("a4.txt"));
}

#[test]
fn enumeration_counts() {
    let nc2: serde_json::Value = serde_json::from_str(&stdout(&["enumerate", "nc2", "--orders", "2,2", "--format", "json"])).unwrap();
    assert_eq!(nc2["count"], 2);
    assert_eq!(stdout(&["enumerate", "psnc2lf", "--orders", "2,2"]).lines().count(), 3);
    assert_eq!(stdout(&["enumerate", "nc", "--orders", "4"]).lines().count(), 14);
}

#[test]
fn oracle_agrees() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["oracle", "--orders", "2,4", "--format", "json"])).unwrap();
    assert_eq!(v["agree"], true);
    assert_eq!(v["theorem1"], v["oracle"]);
}

#[test]
fn finite_n_round_trips() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["finite-n", "--orders", "2,2", "--n", "10", "--format", "json"])).unwrap();
    let alpha: BetaPoly = v["alpha"].as_str().unwrap().parse().unwrap();
    assert_eq!(alpha, finite_n_expansion(&AnnulusShape::new(vec![2, 2]).unwrap(), 10, 8).unwrap());
}

#[test]
fn mc_record_is_consistent() {
    let rec: McRecord =
        serde_json::from_str(&stdout(&["mc", "--orders", "2", "--dim", "8", "--samples", "400", "--seed", "3", "--format", "json"])).unwrap();
    assert_eq!((rec.orders, rec.N, rec.samples), (vec![2], 8, 400));
    assert_eq!(rec.exactGUEorLawValue, 1.0);
    assert!(((rec.estimate - rec.exactGUEorLawValue) / rec.stderr - rec.zscore).abs() < 1e-9);
    let again: McRecord =
        serde_json::from_str(&stdout(&["mc", "--orders", "2", "--dim", "8", "--samples", "400", "--seed", "3", "--format", "json"])).unwrap();
    assert_eq!(again.estimate, rec.estimate);
}

#[test]
fn dump_graph_writes_digraph() {
    let path = std::env::temp_dir().join(format!("wigner-graph-{}.txt", std::process::id()));
    stdout(&["moments", "--orders", "1,2", "--dump-graph", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(text.lines().next(), Some("digraph"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn capability_and_bounds_errors_exit_with_two() {
    for args in [
        &["enumerate", "an", "--n", "6"][..],
        &["cumulants", "--max-r", "5"],
        &["oracle", "--orders", "10"],
        &["finite-n", "--orders", "2,2", "--n", "1"],
        &["moments", "--orders", "0"],
        &["mc", "--orders", "2", "--law", "uniform"],
    ] {
        assert_eq!(wigner(args).status.code(), Some(2), "{args:?}");
    }
}
