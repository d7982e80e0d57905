use std::process::Command;

fn hall(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hall"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn classify_lists_classes() {
    let (code, out, _) = hall(&[
        "classify",
        "--quiver",
        "a2",
        "--q",
        "2",
        "--bound",
        "2",
        "--no-timestamp",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("id"));
    assert!(lines
        .iter()
        .any(|l| l.starts_with("(1,1)") && l.ends_with("yes")));
    assert!(lines
        .iter()
        .any(|l| l.starts_with("(1,0)+(1,0)") && l.ends_with("no")));
}

#[test]
fn multiply_and_comultiply() {
    let (code, out, _) = hall(&[
        "multiply",
        "(1,0)",
        "(1,0)",
        "--quiver",
        "a2",
        "--q",
        "3",
        "--no-timestamp",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("(1,0)+(1,0): 4\n"), "{out}");
    let (code, out, _) = hall(&[
        "comultiply",
        "(1,1)",
        "--quiver",
        "a2",
        "--q",
        "2",
        "--no-timestamp",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("(0,1) ⊗ (1,0): 1\n"), "{out}");
}

#[test]
fn exit_codes() {
    let base = [
        "--quiver",
        "a2",
        "--q",
        "2",
        "--bound",
        "3",
        "--no-timestamp",
    ];
    let with = |extra: &[&str]| -> Vec<String> {
        extra
            .iter()
            .chain(base.iter())
            .map(|s| s.to_string())
            .collect()
    };
    let run = |args: Vec<String>| {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        hall(&refs).0
    };
    assert_eq!(run(with(&["verify", "bialgebra"])), 0);
    assert_eq!(run(with(&["verify", "bialgebra", "--no-braiding"])), 1);
    assert_eq!(run(with(&["verify", "nonsense"])), 2);
    assert_eq!(run(with(&["multiply", "(1,1)", "(1,1)"])), 3);
    assert_eq!(run(with(&["multiply", "(7,7)", "0"])), 2);
    assert_eq!(hall(&["classify", "--quiver", "a2", "--q", "6"]).0, 2);
    assert_eq!(hall(&["classify", "--quiver", "x9"]).0, 2);
    assert_eq!(
        hall(&["classify", "--quiver", "a2", "--q", "3", "--bound", "12"]).0,
        3
    );
}

#[test]
fn quiver_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("a2.json");
    std::fs::write(
        &good,
        r#"{"format_version": 1, "vertices": ["x", "y"], "edges": [["y", "x"]]}"#,
    )
    .unwrap();
    let (code, out, err) = hall(&[
        "serre",
        "--quiver",
        good.to_str().unwrap(),
        "--q",
        "3",
        "--no-timestamp",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("counterexamples=0"));

    let cyclic = dir.path().join("cycle.json");
    std::fs::write(
        &cyclic,
        r#"{"vertices": ["a", "b", "c"], "edges": [["a","b"],["b","c"],["c","a"]]}"#,
    )
    .unwrap();
    let (code, _, err) = hall(&["classify", "--quiver", cyclic.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("error"));
}

#[test]
fn json_is_deterministic_without_timestamps() {
    let args = [
        "verify",
        "all",
        "--quiver",
        "a2",
        "--q",
        "3",
        "--format",
        "json",
        "--no-timestamp",
        "--jobs",
        "3",
    ];
    let (c1, a, _) = hall(&args);
    let (c2, b, _) = hall(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(v.get("generated_at").is_none());
    assert_eq!(v["summary"]["counterexamples"], 0);

    let (_, stamped, _) = hall(&["classify", "--quiver", "a2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stamped).unwrap();
    assert!(v["generated_at"].is_u64());
}
