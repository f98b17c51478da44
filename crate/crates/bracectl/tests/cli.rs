use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bracectl"))
        .args(args)
        .env_remove("BRACECTL_ENUM_CAP")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> std::path::PathBuf {
    let out = dir.join(name);
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", p(&out)]);
    let o = run(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn trivial_z4_is_not_simple() {
    let dir = tempfile::tempdir().unwrap();
    let z4 = construct(
        dir.path(),
        "z4.json",
        &["--family", "trivial", "--moduli", "4"],
    );
    let o = run(&[
        "analyze",
        p(&z4),
        "--simple",
        "--socle",
        "--ybe",
        "--ideals",
    ]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!(r["simple"], false);
    assert_eq!(r["ideal_count"], 3);
    assert_eq!(r["socle_size"], 4);
    assert_eq!(r["ybe"], true);
    assert_eq!(r["involutive"], true);
    assert_eq!(r["nondegenerate"], true);
}

#[test]
fn explicit_order24_report() {
    let dir = tempfile::tempdir().unwrap();
    let b = construct(
        dir.path(),
        "b.json",
        &["--family", "explicit", "--p1", "3", "--p2", "2"],
    );
    let r = report(&run(&["analyze", p(&b), "--simple", "--two-sided"]));
    assert_eq!(r["order"], 24);
    assert_eq!(r["simple"], true);
    assert_eq!(r["ideal_count"], 2);
    assert_eq!(r["two_sided"], false);
}

#[test]
fn invalid_family_parameters_exit_2() {
    let o = run(&[
        "construct",
        "--family",
        "explicit",
        "--p1",
        "7",
        "--p2",
        "5",
    ]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
    assert_eq!(code(&run(&["construct", "--family", "trivial"])), 2);
    assert_eq!(
        code(&run(&["construct", "--family", "trivial", "--moduli", "6"])),
        2
    );
    assert_eq!(code(&run(&["construct", "--family", "nonsense"])), 2);
}

#[test]
fn malformed_descriptors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    for text in [
        "{",
        r#"{"version":7,"group":{"moduli":[2]},"lambda":{"kind":"trivial","params":{}}}"#,
    ] {
        std::fs::write(&bad, text).unwrap();
        assert_eq!(code(&run(&["analyze", p(&bad)])), 2, "{text}");
    }
    assert_eq!(
        code(&run(&["analyze", p(&dir.path().join("missing.json"))])),
        2
    );
}

#[test]
fn axiom_violation_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    // lambda_1 = -1 and lambda_2 = 1 on Z/3 is not a homomorphism of (B, .)
    let bad = dir.path().join("bad.json");
    let d = json!({
        "version": 1,
        "group": {"moduli": [3]},
        "lambda": {"kind": "table", "params": {"classes": [[[1]], [[2]]], "class_of": [0, 1, 0]}}
    });
    std::fs::write(&bad, d.to_string()).unwrap();
    assert_eq!(code(&run(&["analyze", p(&bad)])), 1);
}

#[test]
fn enumeration_cap_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let b = construct(
        dir.path(),
        "b.json",
        &["--family", "explicit", "--p1", "3", "--p2", "2"],
    );
    assert_eq!(code(&run(&["--enum-cap", "10", "analyze", p(&b)])), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_bracectl"))
        .args(["analyze", p(&b)])
        .env("BRACECTL_ENUM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_bracectl"))
        .args(["--enum-cap", "100", "analyze", p(&b)])
        .env("BRACECTL_ENUM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
}

#[test]
fn direct_compose_of_trivials_is_trivial() {
    let dir = tempfile::tempdir().unwrap();
    let a = construct(
        dir.path(),
        "a.json",
        &["--family", "trivial", "--moduli", "3"],
    );
    let b = construct(
        dir.path(),
        "b.json",
        &["--family", "trivial", "--moduli", "2,2"],
    );
    let out = dir.path().join("ab.json");
    let o = run(&[
        "compose",
        "--mode",
        "direct",
        p(&a),
        p(&b),
        "--out",
        p(&out),
    ]);
    assert_eq!(code(&o), 0);
    let r = report(&run(&["analyze", p(&out), "--socle"]));
    assert_eq!(r["order"], 12);
    assert_eq!(r["socle_size"], 12);
    assert_eq!(r["lambda_classes"], 1);
}

#[test]
fn extend_with_the_example_data() {
    let dir = tempfile::tempdir().unwrap();
    let base = construct(
        dir.path(),
        "z2.json",
        &["--family", "trivial", "--moduli", "2"],
    );
    let actions = dir.path().join("ext.json");
    let data = json!({
        "kernel": [2, 2],
        "sigma": [[[1, 0], [0, 1]], [[1, 0], [1, 1]]],
        "nu": [[[1, 0], [0, 1]], [[1, 1], [0, 1]]],
        "tau": [[0, 0], [0, 0], [0, 0], [0, 1]],
        "beta": [[0, 0], [0, 0], [0, 0], [0, 0]]
    });
    std::fs::write(&actions, data.to_string()).unwrap();
    let out = dir.path().join("e.json");
    let o = run(&[
        "compose",
        "--mode",
        "extend",
        p(&base),
        "--actions",
        p(&actions),
        "--out",
        p(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(&run(&["analyze", p(&out), "--socle", "--ybe"]));
    assert_eq!(r["order"], 8);
    assert_eq!(r["kind"], "extension");
    assert_eq!(r["socle_size"], 1);

    // tau(1,1) moved off the cocycle: the validator rejects it
    let mut broken = data.clone();
    broken["tau"][3] = json!([1, 0]);
    std::fs::write(&actions, broken.to_string()).unwrap();
    let o = run(&[
        "compose",
        "--mode",
        "extend",
        p(&base),
        "--actions",
        p(&actions),
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn decompose_and_recompose() {
    let dir = tempfile::tempdir().unwrap();
    let b = construct(
        dir.path(),
        "b.json",
        &["--family", "explicit", "--p1", "3", "--p2", "2"],
    );
    let parts = dir.path().join("parts");
    let o = run(&[
        "decompose",
        p(&b),
        "--coprime",
        "3",
        "8",
        "--out-dir",
        p(&parts),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(&o);
    assert_eq!(r["left_order"], 3);
    assert_eq!(r["right_order"], 8);
    assert_eq!(r["round_trip_isomorphic"], true);
    let left = report(&run(&["analyze", p(&parts.join("left.json")), "--socle"]));
    assert_eq!(left["socle_size"], 3);
    let right = report(&run(&["analyze", p(&parts.join("right.json")), "--socle"]));
    assert_eq!(right["socle_size"], 1);

    let out = dir.path().join("re.json");
    let o = run(&[
        "compose",
        "--mode",
        "matched",
        p(&parts.join("left.json")),
        p(&parts.join("right.json")),
        "--actions",
        p(&parts.join("actions.json")),
        "--out",
        p(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let re = braces::parse_brace(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let orig = braces::parse_brace(&std::fs::read_to_string(&b).unwrap()).unwrap();
    assert!(braces::braces_isomorphic(&re, &orig).unwrap().is_some());
}

#[test]
fn decompose_prime_order_and_recursive() {
    let dir = tempfile::tempdir().unwrap();
    let z5 = construct(
        dir.path(),
        "z5.json",
        &["--family", "trivial", "--moduli", "5"],
    );
    let o = run(&[
        "decompose",
        p(&z5),
        "--coprime",
        "5",
        "1",
        "--out-dir",
        p(&dir.path().join("a")),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(report(&o)["right_order"], 1);

    let r2 = construct(
        dir.path(),
        "r2.json",
        &["--family", "recursive", "--k", "2"],
    );
    let o = run(&[
        "decompose",
        p(&r2),
        "--coprime",
        "3",
        "32",
        "--out-dir",
        p(&dir.path().join("b")),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(report(&o)["round_trip_isomorphic"], true);

    let o = run(&[
        "decompose",
        p(&r2),
        "--coprime",
        "4",
        "24",
        "--out-dir",
        p(&dir.path().join("c")),
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn materialized_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let s = construct(
        dir.path(),
        "s.json",
        &["--family", "explicit", "--p1", "3", "--p2", "2"],
    );
    let t = construct(
        dir.path(),
        "t.json",
        &[
            "--family",
            "explicit",
            "--p1",
            "3",
            "--p2",
            "2",
            "--materialize",
        ],
    );
    let text = std::fs::read_to_string(&t).unwrap();
    assert!(text.contains("\"table\""));
    let a = braces::parse_brace(&std::fs::read_to_string(&s).unwrap()).unwrap();
    let b = braces::parse_brace(&text).unwrap();
    assert!(braces::same_lambda(&a, &b));
}

#[test]
fn hegedus_family() {
    let o = run(&["construct", "--family", "hegedus", "--p", "2", "--n", "2"]);
    assert_eq!(code(&o), 0);
    let b = braces::parse_brace(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert!(braces::socle(&b).is_zero());
    // no order-3 isometry of a non-degenerate binary form over F_3
    assert_eq!(
        code(&run(&[
            "construct",
            "--family",
            "hegedus",
            "--p",
            "3",
            "--n",
            "2"
        ])),
        1
    );
}

#[test]
fn matched_compose_of_the_family_factors() {
    use braces::families::{construct_explicit_family, simple_family_matched_pair};
    let dir = tempfile::tempdir().unwrap();
    let s = construct_explicit_family(3, 2).unwrap().params;
    let d = simple_family_matched_pair(&s).unwrap();
    let write = |name: &str, text: String| {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    };
    let left = write("z3.json", braces::serialize_brace(d.left(), false).unwrap());
    let right = write("k.json", braces::serialize_brace(d.right(), false).unwrap());
    let rows = |a: &braces::Automorphism| json!(a.to_matrix());
    let actions = write(
        "act.json",
        json!({
            "alpha": d.alpha_table().iter().map(rows).collect::<Vec<_>>(),
            "beta": d.beta_table().iter().map(rows).collect::<Vec<_>>(),
        })
        .to_string(),
    );
    let out = dir.path().join("m.json");
    let o = run(&[
        "compose",
        "--mode",
        "matched",
        p(&left),
        p(&right),
        "--actions",
        p(&actions),
        "--out",
        p(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let m = braces::parse_brace(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let family = braces::families::build_simple_family(&s).unwrap();
    assert!(braces::braces_isomorphic(&m, &family).unwrap().is_some());
}
