use std::path::Path;
use std::process::{Command, Output};

use fibcube_cli::report::CheckReport;

fn fibcube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibcube"))
        .args(args)
        .env_remove("FIBCUBE_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fibcube(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/check_report.schema.json");
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

#[test]
fn table_examples() {
    let triangle = stdout(&["table", "pnomial", "--p", "3", "--rows", "5"]);
    assert_eq!(
        triangle.lines().last(),
        Some("1 5 15 30 45 51 45 30 15 5 1")
    );
    assert!(stdout(&["table", "fib_pth_order", "--p", "3", "--n", "7"])
        .trim_end()
        .ends_with(" 13"));
    assert_eq!(
        stdout(&["table", "pnomial", "--p", "2", "--rows", "4"]),
        "1\n1 1\n1 2 1\n1 3 3 1\n1 4 6 4 1\n"
    );
    let csv = stdout(&[
        "table", "weights", "--p", "3", "--n", "4", "--format", "csv",
    ]);
    assert!(csv.starts_with("n,w,count\n"));
    assert!(csv.contains("\n4,3,2\n"));
}

#[test]
fn poly_examples() {
    assert_eq!(
        stdout(&[
            "poly",
            "cube",
            "--family",
            "pth_order",
            "--n",
            "4",
            "--p",
            "3"
        ]),
        "13 + 22*x + 12*x^2 + 2*x^3\n"
    );
    assert_eq!(
        stdout(&["poly", "maxcube", "--family", "p_cube", "--n", "5", "--p", "3"]),
        "3*x + x^2\n"
    );
    assert_eq!(
        stdout(&[
            "poly",
            "weight",
            "--family",
            "pth_order",
            "--n",
            "0",
            "--p",
            "2"
        ]),
        "1\n"
    );
    assert_eq!(
        stdout(&["poly", "distance", "--n", "6", "--p", "3", "--oracle"]),
        stdout(&["poly", "distance", "--n", "6", "--p", "3"])
    );
    // no closed form: census only
    assert_eq!(
        stdout(&[
            "poly",
            "cube",
            "--family",
            "hypercube",
            "--n",
            "2",
            "--oracle"
        ]),
        "4 + 4*x + x^2\n"
    );
    assert_eq!(
        fibcube(&["poly", "cube", "--family", "hypercube", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gf_examples() {
    assert_eq!(
        stdout(&["gf", "order_pth_order", "--p", "2", "-N", "5"]),
        "1,2,3,5,8,13\n"
    );
    assert!(stdout(&["gf", "maxcube", "--p", "1", "-N", "4"])
        .lines()
        .any(|l| l == "4; 3*x^2"));
    assert_eq!(
        stdout(&["gf", "fib_p", "--p", "1", "-N", "6"]),
        "0,1,1,2,3,5,8\n"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "gf",
        "weight_poly",
        "--p",
        "3",
        "-N",
        "4",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(json["coefficients"][4], "1 + 4*x + 6*x^2 + 2*x^3");
    assert_eq!(fibcube(&["gf", "lucas", "--p", "2"]).status.code(), Some(2));
}

#[test]
fn census_dumps() {
    let cubes: Vec<serde_json::Value> =
        serde_json::from_str(&stdout(&["census", "cubes", "--n", "3", "--p", "2"])).unwrap();
    assert_eq!(cubes.len(), 11);
    assert_eq!(
        cubes[0],
        serde_json::json!({"bottom": "000", "top": "000", "k": 0, "d": 0})
    );
    let keys: Vec<(String, String)> = cubes
        .iter()
        .map(|c| {
            (
                c["bottom"].as_str().unwrap().into(),
                c["top"].as_str().unwrap().into(),
            )
        })
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));

    let maximal: Vec<serde_json::Value> = serde_json::from_str(&stdout(&[
        "census", "maximal", "--family", "p_cube", "--n", "4", "--p", "1",
    ]))
    .unwrap();
    let tops: Vec<&str> = maximal.iter().map(|c| c["top"].as_str().unwrap()).collect();
    assert_eq!(tops, ["0101", "1001", "1010"]);

    let graph: serde_json::Value = serde_json::from_str(&stdout(&[
        "census", "graph", "--family", "p_cube", "--n", "5", "--p", "1",
    ]))
    .unwrap();
    assert_eq!(graph["order"], 13);
    assert_eq!(graph["edges"].as_array().unwrap().len(), 20);
}

#[test]
fn verify_reports_validate_against_schema() {
    let validator = schema();
    for args in [
        &["verify", "cubes", "--p", "2", "--n", "0..3"][..],
        &["verify", "maxcubes", "--p", "1..3", "--n", "0..8"][..],
        &["verify", "all", "--p", "1..3", "--n", "0..6"][..],
    ] {
        let text = stdout(args);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert!(validator.is_valid(&value), "{args:?}");
        let report: CheckReport = serde_json::from_value(value).unwrap();
        assert!(report.pass);
        assert!(report.duration_ms.is_none());
    }
    let text = stdout(&["verify", "cubes", "--p", "2", "--n", "0..3"]);
    assert!(text.contains("\"expected\": \"5 + 5*x + x^2\""));
}

#[test]
fn output_file_carries_duration() {
    let dir = std::env::temp_dir().join(format!("fibcube-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let summary = stdout(&[
        "verify",
        "weights",
        "--p",
        "2..5",
        "--n",
        "0..10",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(summary.starts_with("weights: "));
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(schema().is_valid(&value));
    assert!(value["duration_ms"].is_u64());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn stdout_is_deterministic() {
    let args = ["verify", "all", "--p", "1..4", "--n", "0..7"];
    let first = fibcube(&args);
    let mut timed = args.to_vec();
    timed.extend(["--timing", "--jobs", "3"]);
    let second = fibcube(&timed);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stderr.is_empty());
    assert!(String::from_utf8_lossy(&second.stderr).contains(" ms"));
}

#[test]
fn exit_codes_and_caps() {
    assert_eq!(
        fibcube(&["verify", "weights", "--p", "1..3", "--n", "0..4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fibcube(&["verify", "cubes", "--n", "0..30"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fibcube(&["verify", "cubes", "--n", "3..1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fibcube(&["census", "graph", "--n", "5", "--p", "2", "--max-n", "4"])
            .status
            .code(),
        Some(2)
    );
    let capped = Command::new(env!("CARGO_BIN_EXE_fibcube"))
        .args(["verify", "weights", "--n", "0..6"])
        .env("FIBCUBE_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap 5"));
    // the gf suite builds no graphs, so the cap does not apply
    assert_eq!(
        fibcube(&["verify", "gf-consistency", "--p", "1..3", "--n", "0..40"])
            .status
            .code(),
        Some(0)
    );
}
