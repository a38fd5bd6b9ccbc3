use std::path::PathBuf;
use std::process::{Command, Output};

use qloc_core::bounds_audit::{BoundReport, FamilyRow};
use qloc_core::code_geometry::{Embedding, Separator, TilingResult};
use qloc_core::correctability::{verify_certificate, Partition};
use qloc_core::formats::{parse_code, to_json, CodeFile};
use qloc_core::pauli_algebra::DistanceResult;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn fixture(name: &str) -> String {
    dir("fixtures").join(name).to_string_lossy().into_owned()
}

fn qloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qloc"))
        .args(args)
        .env("QLOC_THREADS", "2")
        .output()
        .expect("qloc runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn status(o: &Output) -> i32 {
    o.status.code().unwrap()
}

/// Compares stdout with `golden/<name>`; `QLOC_BLESS=1` rewrites it.
fn golden(name: &str, args: &[&str], code: i32) -> String {
    let o = qloc(args);
    assert_eq!(status(&o), code, "{name}: {}", stderr(&o));
    let out = stdout(&o);
    let path = dir("golden").join(name);
    if std::env::var_os("QLOC_BLESS").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let expect = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(out, expect, "{name} differs from its golden file");
    out
}

/// Parses into `T` and re-serializes to the same bytes.
fn round_trips<T: Serialize + DeserializeOwned>(text: &str) -> T {
    let v: T = serde_json::from_str(text).unwrap();
    assert_eq!(to_json(&v), text);
    v
}

fn value_round_trips(text: &str) -> Value {
    let v: Value = serde_json::from_str(text).unwrap();
    assert_eq!(serde_json::from_str::<Value>(&to_json(&v)).unwrap(), v);
    v
}

#[test]
fn surface_files() {
    let out = golden("surface3.json", &["surface", "--m", "3"], 0);
    let v = value_round_trips(&out);
    let code: CodeFile = serde_json::from_value(v["code"].clone()).unwrap();
    assert_eq!(code.n, 9);
    let emb: Embedding = serde_json::from_value(v["embedding"].clone()).unwrap();
    assert_eq!(emb.n(), 9);
}

#[test]
fn audit_surface_below_threshold() {
    let out = golden(
        "audit_surface3.json",
        &[
            "audit",
            "--code",
            &fixture("surface3.code.json"),
            "--embedding",
            &fixture("surface3.embedding.json"),
            "--ell",
            "2",
        ],
        0,
    );
    let v = value_round_trips(&out);
    assert_eq!(v["long_interactions"], 0);
    assert_eq!(v["d"], 3);
    assert!(v["verdict"].as_str().unwrap().contains("below threshold (k d^2 = 9 < c1 n = 900)"));
}

#[test]
fn audit_csv_lists_interactions() {
    let out = golden(
        "audit_surface3.csv",
        &[
            "audit",
            "--code",
            &fixture("surface3.code.json"),
            "--embedding",
            &fixture("surface3.embedding.json"),
            "--ell",
            "2",
            "--format",
            "csv",
        ],
        0,
    );
    assert!(out.starts_with("qubit_a,qubit_b,generator_index,length\n"));
    assert_eq!(out.lines().count(), 29);
}

#[test]
fn audit_of_built_construction() {
    let tmp = tempfile::tempdir().unwrap();
    let code = tmp.path().join("c.json");
    let emb = tmp.path().join("e.json");
    let o = qloc(&[
        "construct",
        "--inner",
        &fixture("four_two_two.code.json"),
        "--side",
        "3",
        "--ell",
        "40",
        "--out-code",
        code.to_str().unwrap(),
        "--out-embedding",
        emb.to_str().unwrap(),
    ]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let report = value_round_trips(&stdout(&o));
    assert_eq!(report["report"]["long_interactions"], 0);
    let parsed = parse_code(&std::fs::read_to_string(&code).unwrap()).unwrap();
    assert_eq!((parsed.code.n(), parsed.code.k()), (36, 2));
    let o = qloc(&[
        "audit",
        "--code",
        code.to_str().unwrap(),
        "--embedding",
        emb.to_str().unwrap(),
        "--ell",
        "40",
    ]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let v = value_round_trips(&stdout(&o));
    assert_eq!(v["long_interactions"], 0);
    assert_eq!(v["d"], 6);
}

#[test]
fn audit_errors() {
    let o = qloc(&[
        "audit",
        "--code",
        &fixture("noncommuting.code.json"),
        "--embedding",
        &fixture("surface3.embedding.json"),
        "--ell",
        "2",
    ]);
    assert_eq!(status(&o), 2);
    assert!(stderr(&o).contains("generators 0 and 1 do not commute"), "{}", stderr(&o));

    let o = qloc(&[
        "audit",
        "--code",
        &fixture("malformed.code.json"),
        "--embedding",
        &fixture("surface3.embedding.json"),
        "--ell",
        "2",
    ]);
    assert_eq!(status(&o), 2);
    assert!(stderr(&o).contains("line 4, column 19"), "{}", stderr(&o));

    let o = qloc(&[
        "audit",
        "--code",
        &fixture("surface5.code.json"),
        "--embedding",
        &fixture("surface5.embedding.json"),
        "--ell",
        "2",
        "--weight-cap",
        "3",
    ]);
    assert_eq!(status(&o), 3);

    let o = qloc(&[
        "audit",
        "--code",
        &fixture("surface3.code.json"),
        "--embedding",
        &fixture("four_two_two.embedding.json"),
        "--ell",
        "2",
    ]);
    assert_eq!(status(&o), 2);

    let o = qloc(&["audit", "--code", "/nonexistent.json", "--embedding", "x", "--ell", "2"]);
    assert_eq!(status(&o), 2);
    assert!(stderr(&o).contains("/nonexistent.json"));
}

#[test]
fn audit_uses_claimed_distance_beyond_cap() {
    let o = qloc(&[
        "audit",
        "--code",
        &fixture("four_two_two.code.json"),
        "--embedding",
        &fixture("four_two_two.embedding.json"),
        "--ell",
        "1",
        "--weight-cap",
        "1",
    ]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let v = value_round_trips(&stdout(&o));
    assert_eq!(v["d"], 2);
    assert!(v["d_source"].as_str().unwrap().starts_with("claimed_d"));
}

#[test]
fn distance_outputs() {
    let out = golden("distance_surface3.json", &["distance", "--code", &fixture("surface3.code.json")], 0);
    let d: DistanceResult = round_trips(&out);
    assert_eq!(d.exact(), Some(3));
    let out = golden(
        "distance_capped.json",
        &["distance", "--code", &fixture("surface5.code.json"), "--weight-cap", "3"],
        3,
    );
    assert_eq!(round_trips::<DistanceResult>(&out), DistanceResult::LowerBound { lower_bound: 4 });
}

#[test]
fn correctable_verdicts() {
    let out = golden(
        "correctable_small.json",
        &["correctable", "--code", &fixture("surface3.code.json"), "--qubits", "0,4"],
        0,
    );
    assert!(out.contains("\"verdict\": \"correctable\""));
    let out = golden("correctable_all.json", &["correctable", "--code", &fixture("surface3.code.json"), "--all"], 1);
    let v = value_round_trips(&out);
    assert_eq!(v["verdict"], "not correctable");
    assert!(v["witness"].is_string());
    let o = qloc(&["correctable", "--code", &fixture("surface3.code.json"), "--qubits", "9"]);
    assert_eq!(status(&o), 2);
}

#[test]
fn concat_four_two_two_into_surface() {
    let out = golden(
        "concat.json",
        &[
            "concat",
            "--inner",
            &fixture("four_two_two.code.json"),
            "--outer",
            &fixture("surface3.code.json"),
        ],
        0,
    );
    let file: CodeFile = round_trips(&out);
    assert_eq!(file.n, 36);
    assert_eq!(parse_code(&out).unwrap().code.k(), 2);
}

#[test]
fn pad_keeps_parameters() {
    let out = golden(
        "pad.json",
        &[
            "pad",
            "--code",
            &fixture("surface3.code.json"),
            "--r",
            "3",
            "--embedding",
            &fixture("surface3.embedding.json"),
        ],
        0,
    );
    let v = value_round_trips(&out);
    let code: CodeFile = serde_json::from_value(v["code"].clone()).unwrap();
    assert_eq!(code.n, 12);
    let o = qloc(&["pad", "--code", &fixture("surface3.code.json"), "--r", "0"]);
    assert_eq!(status(&o), 2);
}

#[test]
fn tile_and_separator() {
    let out = golden(
        "tile.json",
        &["tile", "--x", &fixture("tile_x.json"), "--y", &fixture("tile_y.json"), "--w", "20", "--ell", "1"],
        0,
    );
    let t: TilingResult = round_trips(&out);
    assert!(t.x_bad as f64 <= t.x_bound * 12.0 && t.y_bad as f64 <= t.y_bound * 6.0);
    let o = qloc(&["tile", "--x", &fixture("tile_x.json"), "--y", &fixture("tile_y.json"), "--w", "3", "--ell", "1"]);
    assert_eq!(status(&o), 2);

    let out = golden("separator.json", &["separator", "--points", &fixture("points30.json"), "--ell", "0.5"], 0);
    let s: Separator = round_trips(&out);
    assert_eq!(s.side_1 + s.middle + s.side_2, 30);
    let o = qloc(&["separator", "--points", &fixture("tile_x.json"), "--ell", "0.5"]);
    assert_eq!(status(&o), 0);
    let o = qloc(&["separator", "--points", &fixture("tile_y.json"), "--ell", "0.5"]);
    assert_eq!(status(&o), 2);
}

#[test]
fn bounds_and_families() {
    let out = golden("bounds.json", &["bounds", "--n", "10000", "--k", "10000", "--d", "100"], 0);
    let b: BoundReport = round_trips(&out);
    assert!(b.above_threshold);
    assert_eq!(status(&qloc(&["bounds", "--n", "10", "--k", "0", "--d", "1"])), 2);

    let csv = golden("families.csv", &["families"], 0);
    assert!(csv.lines().any(|l| l.starts_with("Hypergraph product codes,n,n^{1/2},n,n^{1/4},")));
    let json = golden("families.json", &["families", "--format", "json"], 0);
    let rows: Vec<FamilyRow> = round_trips(&json);
    assert_eq!(rows.len(), 8);
}

#[test]
fn certify_then_verify() {
    let tmp = tempfile::tempdir().unwrap();
    let cert = tmp.path().join("cert.json");
    let o = qloc(&[
        "certify",
        "--code",
        &fixture("surface5.code.json"),
        "--embedding",
        &fixture("surface5.embedding.json"),
        "--ell",
        "1.5",
        "--d",
        "5",
        "--method",
        "grow",
        "--rect",
        "0,1,0,1",
        "-o",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(status(&o), 0, "{}", stderr(&o));
    let text = std::fs::read_to_string(&cert).unwrap();
    let v = value_round_trips(&text);
    let c: qloc_core::correctability::Certificate = serde_json::from_value(v["certificate"].clone()).unwrap();
    let code = parse_code(&std::fs::read_to_string(fixture("surface5.code.json")).unwrap()).unwrap().code;
    assert!(verify_certificate(&code, &c).valid);

    let o = qloc(&[
        "verify",
        "--code",
        &fixture("surface5.code.json"),
        "--cert",
        cert.to_str().unwrap(),
        "--oracle",
    ]);
    assert_eq!(status(&o), 0);
    assert!(stdout(&o).contains("\"oracle_correctable\": true"));

    // Claiming a larger distance than the code has makes a bogus leaf.
    let bogus = tmp.path().join("bogus.json");
    std::fs::write(
        &bogus,
        r#"{"d": 100, "root": 0, "nodes": [{"id": 0, "type": "distance_leaf", "qubits": [0, 1, 2, 3, 4, 5, 6, 7, 8]}]}"#,
    )
    .unwrap();
    let o = qloc(&["verify", "--code", &fixture("surface3.code.json"), "--cert", bogus.to_str().unwrap(), "--oracle"]);
    assert_eq!(status(&o), 1);

    let o = qloc(&[
        "certify",
        "--code",
        &fixture("surface5.code.json"),
        "--embedding",
        &fixture("surface5.embedding.json"),
        "--ell",
        "1.5",
        "--d",
        "5",
    ]);
    assert_eq!(status(&o), 1);
    assert!(value_round_trips(&stdout(&o))["failure"].is_string());
    let failed = tmp.path().join("failed.json");
    std::fs::write(&failed, &o.stdout).unwrap();
    let o = qloc(&["verify", "--code", &fixture("surface5.code.json"), "--cert", failed.to_str().unwrap()]);
    assert_eq!(status(&o), 2);
    assert!(stderr(&o).contains("failed certification"), "{}", stderr(&o));
}

#[test]
fn partition_output() {
    let out = golden(
        "partition_surface5.json",
        &[
            "partition",
            "--code",
            &fixture("surface5.code.json"),
            "--embedding",
            &fixture("surface5.embedding.json"),
            "--ell",
            "1.5",
            "--w",
            "7.5",
            "--weight-cap",
            "5",
        ],
        0,
    );
    let p: Partition = round_trips(&out);
    assert_eq!(p.a.len() + p.b.len() + p.c.len(), 25);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "partition",
        "--code",
        &fixture("surface5.code.json"),
        "--embedding",
        &fixture("surface5.embedding.json"),
        "--ell",
        "1.5",
        "--w",
        "7.5",
        "--weight-cap",
        "5",
    ];
    let a = qloc(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_qloc"))
        .args(args)
        .env("QLOC_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_flag_writes_file() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("f.csv");
    let o = qloc(&["families", "-o", path.to_str().unwrap()]);
    assert_eq!(status(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&qloc(&["families"])));
}
