use std::process::Command;

use weylroots::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("weylroots").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn class_and_brute_methods_print_identical_json() {
    let class = call(&[
        "roots", "--group", "B", "--n", "2", "--k", "2", "--method", "class",
    ]);
    let brute = call(&[
        "roots", "--group", "B", "--n", "2", "--k", "2", "--method", "brute",
    ]);
    assert_eq!(class.0, 0);
    assert_eq!(class, brute);
    let v: serde_json::Value = serde_json::from_str(&class.1).unwrap();
    assert_eq!(v["values"][0]["class"], "[1,1|]");
    assert_eq!(v["values"][0]["value"], "6");
}

#[test]
fn subgroup_methods_agree() {
    for g in ["D", "Z2A", "AB", "AD"] {
        let outs: Vec<_> = ["class", "brute", "series"]
            .iter()
            .map(|m| call(&["roots", "--group", g, "--n", "4", "--k", "6", "--method", m]))
            .collect();
        assert_eq!(outs[0].0, 0, "{g}: {}", outs[0].2);
        assert_eq!(outs[0], outs[1], "{g}");
        assert_eq!(outs[0], outs[2], "{g}");
    }
}

#[test]
fn hlc_methods_agree() {
    let series = call(&["hlc", "--n", "3", "--lambda", "[2|1]"]);
    let brute = call(&["hlc", "--n", "3", "--lambda", "[2|1]", "--method", "brute"]);
    assert_eq!(series.0, 0, "{}", series.2);
    assert_eq!(series.1.replace("\"series\"", "\"brute-force\""), brute.1);
    let plain = call(&[
        "hlc",
        "--n",
        "3",
        "--k",
        "2",
        "--aggregate",
        "plain",
        "--format",
        "csv",
    ]);
    let plain_brute = call(&[
        "hlc",
        "--n",
        "3",
        "--k",
        "2",
        "--aggregate",
        "plain",
        "--method",
        "brute",
        "--format",
        "csv",
    ]);
    let roots = call(&[
        "roots", "--group", "B", "--n", "3", "--k", "2", "--format", "csv",
    ]);
    assert_eq!(plain.1, roots.1);
    assert_eq!(plain_brute.1, roots.1);
}

#[test]
fn fs_suite_passes() {
    let (code, out, _) = call(&["verify", "--suite", "fs", "--n-max", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"status\": \"pass\""));
}

#[test]
fn counterexample_suite_passes() {
    let (code, out, err) = call(&["verify", "--suite", "counterexample"]);
    assert_eq!(code, 0, "{out}{err}");
}

#[test]
fn series_truncation_bound_exits_three() {
    let (code, _, err) = call(&[
        "roots",
        "--group",
        "D",
        "--n",
        "2",
        "--k",
        "2",
        "--method",
        "series",
        "--bound-override",
        "series=1",
    ]);
    assert_eq!(code, 3, "{err}");
    assert!(err.contains("`series`"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["roots", "--group", "B", "--n", "2"]).0, 2);
    assert_eq!(
        call(&["roots", "--group", "Q", "--n", "2", "--k", "1"]).0,
        2
    );
    assert_eq!(
        call(&["roots", "--group", "B", "--n", "2", "--k", "0", "--method", "series"]).0,
        2
    );
    assert_eq!(
        call(&["roots", "--group", "D", "--n", "2", "--k", "1", "--twist", "chi"]).0,
        2
    );
    assert_eq!(call(&["hlc", "--n", "3", "--lambda", "[2|]"]).0, 2);
    assert_eq!(call(&["chartable", "--group", "D", "--n", "3"]).0, 2);
    assert_eq!(call(&["verify", "--bound-override", "nonsense=3"]).0, 2);
}

#[test]
fn bound_violations_exit_three_and_name_the_bound() {
    let (code, _, err) = call(&[
        "roots", "--group", "B", "--n", "9", "--k", "2", "--method", "brute",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("brute-force"), "{err}");
    let (code, out, _) = call(&[
        "roots",
        "--group",
        "B",
        "--n",
        "9",
        "--k",
        "2",
        "--method",
        "brute",
        "--bound-override",
        "brute-force=6",
    ]);
    assert_eq!((code, out.is_empty()), (3, true));
}

#[test]
fn negative_k_is_accepted() {
    let neg = call(&["roots", "--group", "B", "--n", "3", "--k", "-3"]);
    let pos = call(&["roots", "--group", "B", "--n", "3", "--k", "3"]);
    assert_eq!(neg.0, 0, "{}", neg.2);
    assert_eq!(neg.1.replace("\"k\": -3", "\"k\": 3"), pos.1);
}

#[test]
fn chartable_defaults_to_csv() {
    let (code, out, _) = call(&["chartable", "--group", "S", "--n", "3"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some(",[3],\"[2,1]\",\"[1,1,1]\""));
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn properness_reports_verdicts() {
    let (code, out, _) = call(&["properness", "--group", "AB", "--n", "4", "--k-set", "1..3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let ks: Vec<_> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["k"].as_i64().unwrap())
        .collect();
    assert_eq!(ks, [1, 2, 3]);
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["verdict"] == "proper"));
}

#[test]
fn output_is_byte_stable() {
    let bin = env!("CARGO_BIN_EXE_weylroots");
    let args = [
        "properness",
        "--group",
        "AD",
        "--n",
        "5",
        "--k-set",
        "1,2,4",
        "--format",
        "table",
    ];
    let a = Command::new(bin).args(args).output().unwrap();
    let b = Command::new(bin).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_weylroots");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["classes", "--n", "3"]), Some(0));
    assert_eq!(code(&["classes"]), Some(2));
    assert_eq!(code(&["chartable", "--group", "B", "--n", "11"]), Some(3));
}
