use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

/// Runs the binary and returns the exit code with the parsed JSON report.
fn run(args: &[&str], stdin: Option<&str>) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cadgraph"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    {
        let mut pipe = child.stdin.take().unwrap();
        pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    }
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap(), report)
}

#[test]
fn check_reports_predicates() {
    let (code, r) = run(&["check", &fixture("doublet.json")], None);
    assert_eq!(code, 0);
    let res = &r["result"];
    assert_eq!(res["mi"], true);
    assert_eq!(res["threeconn"], true);
    assert_eq!(res["planar"], true);
    assert_eq!(res["freedom"], 0);
    assert_eq!(r["command"][0], "check");
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);

    let (_, r) = run(&["check", &fixture("k33.json")], None);
    assert_eq!(r["result"]["mi"], true);
    assert_eq!(r["result"]["threeconn"], true);
    assert_eq!(r["result"]["planar"], false);

    let (code, r) = run(&["check", &fixture("square.json")], None);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["mi"], false);
    assert_eq!(r["result"]["freedom"], 1);

    let (_, r) = run(&["check", "--emit-dot", &fixture("doublet.json")], None);
    assert!(r["result"]["embedding_dot"].as_str().unwrap().starts_with("graph"));
}

#[test]
fn malformed_input_exits_two_with_position() {
    let (code, r) = run(&["check", "-"], Some("{\"vertices\": [1, 2],\n \"edges\": [[1, 2],]}"));
    assert_eq!(code, 2);
    assert_eq!(r["status"], "input_error");
    assert_eq!(r["error"]["line"], 2);
    assert!(r["error"]["column"].as_u64().is_some());

    let (code, r) = run(&["check", "-"], Some("{\"vertices\": [1, 2], \"edges\": [[1, 1]]}"));
    assert_eq!(code, 2);
    assert!(r["error"]["message"].as_str().unwrap().contains("self-loop"));

    let (code, _) = run(&["check", "/nonexistent/graph.json"], None);
    assert_eq!(code, 2);
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let a = run(&["classify", &fixture("fig3.json")], None).1;
    let b = run(&["classify", &fixture("fig3.json")], None).1;
    assert_eq!(strip(a), strip(b));
    let c = run(&["check", &fixture("fig3.json")], None).1;
    let d = run(&["check", "--emit-dot", &fixture("fig3.json")], None).1;
    assert_ne!(c["input_digest"], d["input_digest"]);
}

#[test]
fn reduce_traces_and_preconditions() {
    let (code, r) = run(&["reduce", &fixture("doublet.json")], None);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["steps"].as_array().unwrap().len(), 0);
    assert_eq!(r["result"]["terminal_kind"], "doublet");

    let (code, r) = run(&["reduce", &fixture("fig5-limpet.json")], None);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["step_count"], 1);
    assert_eq!(r["result"]["steps"][0]["kind"], "substitute");

    let (code, r) = run(&["reduce", &fixture("fig3.json")], None);
    assert_eq!(code, 1);
    assert!(r["error"]["message"].as_str().unwrap().contains("not 3-connected"));
}

#[test]
fn classify_fixtures() {
    let (code, r) = run(&["classify", &fixture("fig3.json")], None);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["status"], "qs");

    let (code, r) = run(&["classify", &fixture("doublet-dims.json")], None);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["status"], "non_soluble_certified");
    assert_eq!(r["result"]["dimensioned"]["jacobian_nonsingular"], true);
    assert_eq!(r["result"]["certificate"]["factor_degrees"], serde_json::json!([6, 6, 8, 8]));

    let (code, r) = run(&["classify", &fixture("k33.json")], None);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["status"], "unknown");

    let (code, r) = run(&["classify", &fixture("square.json")], None);
    assert_eq!(code, 2);
    assert!(r["error"]["message"].as_str().unwrap().contains("not maximally independent"));

    let (code, _) = run(&["classify", "--unsquared", &fixture("fig3.json")], None);
    assert_eq!(code, 2);
}

#[test]
fn doublet_certificate_matches_golden() {
    let (code, r) = run(&["doublet-cert", "--dims", "13,15,8,16,10,13,5,5", "--golden"], None);
    assert_eq!(code, 0);
    let res = &r["result"];
    assert_eq!(res["eliminant_degree"], 28);
    assert_eq!(res["status"], "complete");
    assert_eq!(res["golden"]["matches"], true);
    let degrees: Vec<u64> = res["factors"].as_array().unwrap().iter().map(|f| f["degree"].as_u64().unwrap()).collect();
    assert_eq!(degrees, vec![6, 6, 8, 8]);

    // other lengths give a different eliminant, so the golden comparison fails
    let (code, r) = run(&["doublet-cert", "--dims", "1,2,3,4,5,6,7,8", "--golden"], None);
    assert_eq!(code, 1);
    assert_eq!(r["result"]["golden"]["matches"], false);

    let (code, r) = run(&["doublet-cert", "--dims", "13,15,8,16,10,13,0,0"], None);
    assert_eq!(code, 1);
    assert!(r["error"]["message"].as_str().unwrap().contains("degree drop"));

    let (code, _) = run(&["doublet-cert", "--dims", "1,2,3"], None);
    assert_eq!(code, 2);
}

#[test]
fn algebra_subcommands() {
    let (code, r) = run(&["factor", &fixture("h3prime.txt")], None);
    assert_eq!(code, 0);
    assert_eq!(r["result"]["polynomials"][0]["degrees"], serde_json::json!([6, 6, 8, 8]));

    let (code, r) = run(&["resultant", "--var", "x"], Some("x - a\nx - b\n"));
    assert_eq!(code, 0);
    assert_eq!(r["result"]["resultant"], "a - b");

    let sparse = "vars x a b\n1 1 0 0\n-1 0 1 0\n---\n1 1 0 0\n-1 0 0 1\n";
    let (code, r) = run(&["resultant", "--var", "x", "-"], Some(sparse));
    assert_eq!(code, 0);
    assert_eq!(r["result"]["resultant"], "a - b");
    assert!(r["result"]["sparse"].as_str().unwrap().starts_with("vars x a b"));

    let (code, r) = run(&["galois", "--prime-budget", "500"], Some("1 0 0 0 1\n"));
    assert_eq!(code, 1);
    assert_eq!(r["result"]["verdict"], "inconclusive");
    assert!(r["result"]["notice"].as_str().unwrap().contains("500 primes"));

    let (code, r) = run(&["galois"], Some("-1 -1 0 0 0 1\n"));
    assert_eq!(code, 0);
    assert_eq!(r["result"]["verdict"], "full_symmetric");

    let (code, _) = run(&["galois"], Some("-1 0 1\n"));
    assert_eq!(code, 2);
    let (code, r) = run(&["resultant", "--var", "x"], Some("vars x\n1 2 3\n"));
    assert_eq!(code, 2);
    assert_eq!(r["error"]["line"], 2);
}

#[test]
fn pretty_summary() {
    let out = Command::new(env!("CARGO_BIN_EXE_cadgraph"))
        .args(["--pretty", "check", &fixture("doublet.json")])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("mi: true"));
    assert!(text.contains("freedom: 0"));
}
