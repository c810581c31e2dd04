use grpf::cli::run;
use serde_json::Value;

fn json_of(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["grpf"];
    argv.extend_from_slice(args);
    argv.push("--json");
    let out = run(argv);
    let v = if out.stdout.is_empty() { Value::Null } else { serde_json::from_str(&out.stdout).unwrap() };
    (out.code, v)
}

fn raw(args: &[&str]) -> grpf::cli::Outcome {
    run(std::iter::once("grpf").chain(args.iter().copied()))
}

#[test]
fn classify_report() {
    let (code, v) = json_of(&["classify", "--n", "10", "--k", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "classify");
    assert_eq!(v["result"]["y1_type"], "Fano");
    assert_eq!(v["result"]["dim_y1"], 11);
    assert!(v["provenance"].as_array().is_some_and(|p| !p.is_empty()));
    assert!(v.get("timing").is_none());
}

#[test]
fn unsupported_parameters_exit_two_naming_the_bound() {
    let out = raw(&["classify", "--n", "3", "--k", "99"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("k <= (n choose 2)"), "{}", out.stderr);
    let out = raw(&["classify", "--n", "2", "--k", "1"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("n >= 3"));
    let out = raw(&["collection", "verify", "--n", "8", "--set", "T"]);
    assert_eq!(out.code, 2);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(raw(&["classify", "--n", "10"]).code, 2);
    assert_eq!(raw(&["frobnicate"]).code, 2);
    let help = raw(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("verify-all"));
    // the fault switch exists but is not advertised
    assert!(!raw(&["verify-all", "--help"]).stdout.contains("inject"));
}

#[test]
fn malformed_family_files() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("syntax.json", "{\"n\": 4,", "invalid JSON"),
        ("cell.json", r#"{"n":2,"k":1,"field":"Q","matrix":[["x"]]}"#, "matrix[0][0]"),
        ("rows.json", r#"{"n":4,"k":2,"field":"Q","matrix":[[1,0,0,0,0,0]]}"#, "rows"),
        ("k.json", r#"{"n":3,"k":7,"field":"Q","matrix":[]}"#, "(n choose 2)"),
    ];
    for (name, text, needle) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        let out = raw(&["pfaffian", "build", "--in", path.to_str().unwrap()]);
        assert_eq!(out.code, 2, "{name}");
        assert!(out.stderr.contains(needle), "{name}: {}", out.stderr);
    }
    let out = raw(&["pfaffian", "build", "--in", "/nonexistent/family.json"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("cannot read"));
}

#[test]
fn random_family_round_trip_through_out() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    let out = raw(&["pfaffian", "random", "--n", "6", "--k", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let (code, v) = json_of(&["pfaffian", "build", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["degree"], 3);
    assert_eq!(v["params"]["field"]["p"], 10007);
    let (code, v) = json_of(&["pfaffian", "sample", "--in", path.to_str().unwrap(), "--points", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["params"]["prime"], 10007);
    // a different explicit prime cannot sample a family defined mod 10007
    let out = raw(&["pfaffian", "sample", "--in", path.to_str().unwrap(), "--prime", "101"]);
    assert_eq!(out.code, 2);
}

#[test]
fn odd_family_gives_submaximal_pfaffians() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    std::fs::write(&path, r#"{"n":3,"k":3,"field":"Q","matrix":[[1,0,0],[0,1,0],[0,0,1]]}"#).unwrap();
    let (code, v) = json_of(&["pfaffian", "build", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["kind"], "submaximal");
    assert_eq!(v["result"]["polynomials"], serde_json::json!(["u3", "u2", "u1"]));
}

#[test]
fn json_is_byte_identical_and_sorted() {
    let args = ["pfaffian", "sample", "--n", "8", "--k", "4", "--points", "20", "--seed", "7", "--json"];
    let a = raw(&args);
    let b = raw(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let other = raw(&["pfaffian", "sample", "--n", "8", "--k", "4", "--points", "20", "--seed", "8", "--json"]);
    assert_ne!(a.stdout, other.stdout);
    let s = &a.stdout;
    let pos = |k: &str| s.find(&format!("\"{k}\"")).unwrap();
    assert!(pos("command") < pos("params") && pos("params") < pos("provenance") && pos("provenance") < pos("result"));
    for cmd in [
        vec!["hodge", "grass-section", "--n", "7", "--k", "7", "--json"],
        vec!["windows", "--n", "9", "--k", "4", "--json"],
        vec!["bwb", "--n", "6", "--s=2,-1", "--q", "1,0,0,-1", "--json"],
    ] {
        assert_eq!(raw(&cmd).stdout, raw(&cmd).stdout);
    }
}

#[test]
fn timing_only_on_request() {
    let (_, v) = json_of(&["hodge", "hypersurface", "--dim", "4", "--degree", "5", "--timing"]);
    assert!(v["timing"]["total_ms"].is_u64());
    let out = raw(&["hodge", "hypersurface", "--dim", "4", "--degree", "5"]);
    assert!(!out.stdout.contains("time"));
}

#[test]
fn verification_failures_exit_one_with_counterexample() {
    let (code, v) = json_of(&["lemma", "check", "--n", "10", "--target", "5,9"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["verdict"], "Counterexample");
    let c = &v["result"]["counterexamples"][0];
    assert!(c["result"]["degree"].as_u64().unwrap() > 0);

    let (code, v) = json_of(&["verify-all", "--inject-fault", "rho"]);
    assert_eq!(code, 1);
    let checks = v["result"]["checks"].as_array().unwrap();
    let serre = checks.iter().find(|c| c["id"] == "10a").unwrap();
    assert_eq!(serre["status"], "fail");
    assert_eq!(v["result"]["passed"], false);
}

#[test]
fn bwb_subcommand() {
    let (code, v) = json_of(&["bwb", "--n", "10", "--s", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dimension"], 45);
    let (_, v) = json_of(&["bwb", "--n", "10", "--s=-10,-10"]);
    assert_eq!(v["result"]["degree"], 16);
    let out = raw(&["bwb", "--n", "5", "--s", "1,2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("dominant"));
    assert_eq!(raw(&["bwb", "--n", "5", "--s", "1,2,3"]).code, 2);
}

#[test]
fn text_output_is_readable() {
    let out = raw(&["hodge", "hypersurface", "--dim", "4", "--degree", "5"]);
    assert!(out.stdout.contains("middle row: 1 101 101 1"));
    let out = raw(&["collection", "verify", "--n", "7"]);
    assert!(out.stdout.starts_with("PASS"));
    assert!(!out.stdout.contains('\x1b'));
}
