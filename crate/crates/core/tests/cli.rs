use std::path::{Path, PathBuf};

use insdel::cli::{dispatch, Outcome};
use insdel::Code;
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    dispatch(std::iter::once("insdel").chain(args.iter().copied()))
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

fn json_of(command: &str, args: &[&str]) -> Value {
    let mut full = vec![command];
    full.extend_from_slice(args);
    full.push("--json");
    let out = run(&full);
    assert_eq!(out.code, 0, "{command}: {}", out.stderr);
    let value: Value = serde_json::from_str(&out.stdout).expect("stdout is one JSON document");
    let schema: Value = serde_json::from_str(
        &std::fs::read_to_string(schema_dir().join(format!("{command}.schema.json"))).unwrap(),
    )
    .unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| e.to_string())
        .collect();
    assert!(
        errors.is_empty(),
        "{command} output violates its schema: {errors:?}\n{value}"
    );
    value
}

#[test]
fn dist_example() {
    let out = run(&["dist", "--q", "3", "--u", "0,0,1,2,0", "--v", "0,2,0,0,1"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "4\n"));
    assert_eq!(
        run(&["dist", "--q", "2", "--u", "", "--v", "1,0"]).stdout,
        "2\n"
    );
    assert_eq!(
        run(&["dist", "--q", "3", "--u", "2,0,1", "--v", "0,0,3", "--metric", "l1"]).stdout,
        "4\n"
    );
    assert_eq!(
        run(&["dist", "--q", "2", "--u", "0,1", "--v", "0,1,1"]).stdout,
        "1\n"
    );
}

#[test]
fn exit_codes() {
    let unknown = run(&["frobnicate"]);
    assert_eq!(unknown.code, 64);
    assert!(unknown.stderr.contains("construct-rs2"));
    assert_eq!(run(&[]).code, 64);
    assert_eq!(run(&["dist", "--q", "3"]).code, 64);
    assert_eq!(
        run(&["dist", "--q", "2", "--u", "0,2", "--v", "0,1"]).code,
        1
    );
    assert_eq!(
        run(&["exact-iq", "--q", "2", "--n", "3", "--d", "3"]).code,
        1
    );
    assert_eq!(
        run(&["exact-iq", "--q", "2", "--n", "13", "--d", "4"]).code,
        2
    );
    assert_eq!(
        run(&["construct-l1", "--q", "30", "--n", "30", "--delta", "2"]).code,
        2
    );
    assert_eq!(run(&["construct-rs2", "--n", "40"]).code, 2);
    assert_eq!(run(&["construct-rs2", "--n", "4", "--q", "36"]).code, 1);
    assert_eq!(
        run(&[
            "witness-rs",
            "--q",
            "7",
            "--k",
            "3",
            "--alphas",
            "0,1,2,3,4"
        ])
        .code,
        1
    );
    assert_eq!(
        run(&["--threads", "0", "dist", "--q", "2", "--u", "0", "--v", "1"]).code,
        1
    );
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn bounds_json() {
    let v = json_of("bounds", &["--q", "2", "--n", "3", "--d", "4"]);
    assert_eq!(v["singleton"], "4");
    assert_eq!(v["sub_singleton"], "2");
    assert_eq!(v["sub_singleton_clause"], "iii");
    let clauses = v["sub_singleton_clauses"].as_array().unwrap();
    assert!(clauses.iter().any(|c| c[0] == "ii" && c[1] == "3"));
    let v = json_of(
        "bounds",
        &[
            "--q", "2", "--n", "10", "--d", "4", "--k", "4", "--delta", "2",
        ],
    );
    assert_eq!(v["field_threshold"]["max_q"], "512");
    assert_eq!(v["support_bound"]["bound_applies"], true);
    assert_eq!(
        run(&["bounds", "--q", "2", "--n", "3", "--d", "4", "--k", "2"]).code,
        64
    );
}

#[test]
fn construct_lift_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let l1 = dir.path().join("l1.code");
    let lifted = dir.path().join("lifted.code");
    let (l1s, lifteds) = (l1.to_str().unwrap(), lifted.to_str().unwrap());
    let report = json_of(
        "construct-l1",
        &[
            "--q", "4", "--n", "8", "--delta", "2", "--r", "5", "--out", l1s,
        ],
    );
    assert_eq!(report["guaranteed_lower_bound"], 42);
    assert!(report["size"].as_u64().unwrap() >= 42);
    assert_eq!(report["verified_min_l1"], 4);
    let text = std::fs::read_to_string(&l1).unwrap();
    let code = Code::from_text(&text).unwrap();
    assert_eq!(code.to_text(), text);
    assert_eq!(code.len() as u64, report["size"].as_u64().unwrap());

    let lift = json_of("lift", &["--in", l1s, "--out", lifteds, "--verify"]);
    assert_eq!(lift["status"], "verified");
    assert_eq!(lift["min_insdel"], 4);
    let text = std::fs::read_to_string(&lifted).unwrap();
    assert_eq!(Code::from_text(&text).unwrap().to_text(), text);
    let unverified = json_of("lift", &["--in", l1s, "--out", lifteds]);
    assert_eq!(unverified["status"], "inherited_unverified");

    let d = json_of("code-distance", &["--in", lifteds]);
    assert_eq!(
        (d["metric"].as_str(), d["distance"].as_u64()),
        (Some("insdel"), Some(4))
    );
    let d = json_of("code-distance", &["--in", l1s]);
    assert_eq!(
        (d["metric"].as_str(), d["distance"].as_u64()),
        (Some("l1"), Some(4))
    );
    assert_eq!(
        run(&["code-distance", "--in", l1s, "--metric", "insdel"]).code,
        1
    );
    assert_eq!(run(&["lift", "--in", lifteds, "--out", l1s]).code, 1);
}

#[test]
fn counterexample_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cx.code");
    let v = json_of(
        "counterexample",
        &["--q", "5", "--n", "4", "--out", path.to_str().unwrap()],
    );
    assert_eq!(
        (v["size"].as_u64(), v["distance"].as_u64()),
        (Some(6), Some(6))
    );
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("INSDEL 5 4 6\n"));
    assert_eq!(Code::from_text(&text).unwrap().to_text(), text);
    assert_eq!(
        run(&["code-distance", "--in", path.to_str().unwrap()])
            .stdout
            .lines()
            .next(),
        Some("6")
    );
}

#[test]
fn rs_commands() {
    let v = json_of("construct-rs2", &["--n", "4"]);
    assert_eq!(v["q"], 37);
    assert_eq!(v["evaluation_vector"][0]["index"], 1);
    let alphas: Vec<String> = v["alphas"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| a.to_string())
        .collect();
    let joined = alphas.join(",");
    let verdict = json_of(
        "verify-rs2",
        &["--q", "37", "--n", "4", "--alphas", &joined, "--exhaustive"],
    );
    assert_eq!(verdict["holds"], true);
    assert_eq!(verdict["exhaustive_distance"], 4);

    let bad = json_of(
        "verify-rs2",
        &[
            "--q",
            "7",
            "--n",
            "4",
            "--alphas",
            "0,1,2,3",
            "--exhaustive",
        ],
    );
    assert_eq!(bad["holds"], false);
    assert_eq!(bad["witness"]["i"], serde_json::json!([1, 2, 3]));
    assert_eq!(
        run(&["verify-rs2", "--q", "7", "--n", "3", "--alphas", "0,1,2,3"]).code,
        1
    );

    let w = json_of(
        "witness-rs",
        &["--q", "11", "--k", "3", "--alphas", "0,1,2,3,4,5"],
    );
    assert_eq!(w["i"], serde_json::json!([3, 4, 5, 6]));
    assert_eq!(w["j"], serde_json::json!([1, 3, 4, 5]));
    assert!(w["lcs"].as_u64().unwrap() >= 4);
    assert_ne!(w["f"], w["g"]);
}

#[test]
fn exact_iq_and_threads() {
    let one = json_of(
        "exact-iq",
        &["--q", "3", "--n", "4", "--d", "4", "--threads", "1"],
    );
    let many = json_of(
        "exact-iq",
        &["--q", "3", "--n", "4", "--d", "4", "--threads", "4"],
    );
    assert_eq!(one["size"], 11);
    assert_eq!(one["code"], many["code"]);
    let text = run(&["exact-iq", "--q", "2", "--n", "3", "--d", "6"]);
    assert_eq!(text.stdout, "I_2(3,6) = 2\n0 0 0\n1 1 1\n");
    assert_eq!(
        json_of(
            "dist",
            &["--q", "2", "--u", "0,1", "--v", "1,0", "--metric", "lcs"]
        )["value"],
        1
    );
}

#[test]
fn selftest_single_criterion() {
    let v = json_of("selftest", &["--criterion", "9"]);
    assert_eq!(v["pass"], true);
    assert_eq!(run(&["selftest", "--criterion", "12"]).code, 1);
    let text = run(&["selftest", "--criterion", "2"]);
    assert!(text.stdout.starts_with("PASS criterion  2"));
}
