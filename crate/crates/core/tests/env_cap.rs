//! Kept in its own binary: it mutates the process environment.

use insdel::cli::dispatch;

#[test]
fn pair_cap_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cx.code");
    assert_eq!(
        dispatch([
            "insdel",
            "counterexample",
            "--q",
            "5",
            "--n",
            "4",
            "--out",
            path.to_str().unwrap()
        ])
        .code,
        0
    );
    std::env::set_var("INSDEL_MAX_PAIRS", "3");
    let capped = dispatch(["insdel", "code-distance", "--in", path.to_str().unwrap()]);
    std::env::set_var("INSDEL_MAX_PAIRS", "bogus");
    let bogus = dispatch(["insdel", "code-distance", "--in", path.to_str().unwrap()]);
    std::env::remove_var("INSDEL_MAX_PAIRS");
    assert_eq!(capped.code, 2);
    assert_eq!(bogus.code, 1);
}

#[test]
fn lift_falls_back_to_inherited_distance() {
    let dir = tempfile::tempdir().unwrap();
    let (l1, out) = (dir.path().join("a.code"), dir.path().join("b.code"));
    std::fs::write(&l1, "CWL1 2 3 3\n3 0\n2 1\n0 3\n").unwrap();
    std::env::set_var("INSDEL_MAX_PAIRS", "2");
    let r = dispatch([
        "insdel",
        "lift",
        "--in",
        l1.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--verify",
        "--json",
    ]);
    std::env::remove_var("INSDEL_MAX_PAIRS");
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["status"], "inherited_unverified");
    assert_eq!(v["min_insdel"], 2);
}
