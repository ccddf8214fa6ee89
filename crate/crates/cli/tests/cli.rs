use std::io::Write;
use std::process::{Command, Output, Stdio};

use domination::{write_graph6, Graph};
use serde_json::Value;

fn dompoly(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dompoly"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str]) -> Output {
    dompoly(args, "")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

fn without_timings(out: &Output) -> Value {
    let mut v = json(out);
    v.as_object_mut().unwrap().remove("timings");
    v
}

fn all_labeled_graph6(n: usize) -> String {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            write_graph6(&Graph::from_edges(n, edges).unwrap()) + "\n"
        })
        .collect()
}

#[test]
fn compute_star() {
    let out = run(&["compute", "--family", "star", "--n", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["command"], "compute");
    assert_eq!(strings(&v["results"]["coefficients"]), ["0", "1", "3", "4", "1"]);
    assert_eq!(v["results"]["analysis"]["mode"], "3");
    assert_eq!(v["results"]["analysis"]["unimodal"], true);
    assert_eq!(strings(&v["results"]["ratios"]), ["0", "1/4", "1/2", "1", "1"]);
    assert!(v["engine_version"].is_string());
    assert!(v["timings"]["wall_ms"].is_string());
}

#[test]
fn compute_complete_csv() {
    let out = run(&["compute", "--family", "complete", "--n", "3", "--csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "k,d_k\n0,0\n1,3\n2,3\n3,1\n");
}

#[test]
fn compute_rejects_malformed_graph6_with_offset() {
    let out = run(&["compute", "--g6", "invalid!"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("byte offset"), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
}

#[test]
fn compute_reports_capacity() {
    let out = run(&["compute", "--family", "complete", "--n", "40"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("capacity"), "{}", stderr(&out));
    // raising the limit makes it enumerable
    let out = run(&["compute", "--family", "star", "--n", "40", "--limit", "64"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn compute_reads_stdin() {
    let out = dompoly(&["compute"], "n 3\n0 1\n1 2\n");
    assert_eq!(code(&out), 0);
    assert_eq!(strings(&json(&out)["results"]["coefficients"]), ["0", "1", "3", "1"]);
    let out = dompoly(&["compute"], "Bw\n");
    assert_eq!(strings(&json(&out)["results"]["coefficients"]), ["0", "3", "3", "1"]);
    assert_eq!(code(&dompoly(&["compute"], "")), 2);
}

#[test]
fn compute_large_coefficients_are_strings() {
    let out = run(&["compute", "--family", "empty", "--n", "3"]);
    assert_eq!(strings(&json(&out)["results"]["coefficients"]), ["0", "0", "0", "1"]);
    let out = run(&["compute", "--family", "complete", "--n", "60", "--limit", "64"]);
    let v = json(&out);
    // C(60, 30) exceeds 2^53
    assert_eq!(v["results"]["coefficients"][30], "118264581564861424");
}

#[test]
fn output_is_deterministic_and_worker_independent() {
    let args = ["compute", "--family", "gnp", "--n", "22", "--p", "0.3", "--seed", "5"];
    let a = run(&[&args[..], &["--workers", "1"]].concat());
    let b = run(&[&args[..], &["--workers", "4"]].concat());
    let c = run(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(without_timings(&a), without_timings(&b));
    assert_eq!(
        serde_json::to_string(&without_timings(&b)).unwrap(),
        serde_json::to_string(&without_timings(&c)).unwrap()
    );
}

#[test]
fn text_format() {
    let out = run(&["compute", "--family", "path", "--n", "4", "--format", "text"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("coefficients: [0, 0, 4, 4, 1]"), "{text}");
}

#[test]
fn verify_growth_on_path() {
    let out = run(&["verify", "--lemma", "2.2", "--family", "path", "--n", "6"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["results"]["checked"], "6");
    assert_eq!(v["results"]["all_hold"], true);
    let named = run(&["verify", "--lemma", "growth", "--family", "path", "--n", "6"]);
    assert_eq!(without_timings(&named)["results"], v["results"]);
}

#[test]
fn verify_pairs_on_complete_graph() {
    let out = run(&["verify", "--lemma", "dprime", "--family", "complete", "--n", "5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["results"]["checked"], "31");
    assert!(v["results"]["instances"].as_array().unwrap().iter().all(|e| e["pairs"] == "0"));
    let one = run(&["verify", "--lemma", "dprime", "--family", "path", "--n", "4", "--set", "0,3"]);
    assert_eq!(json(&one)["results"]["checked"], "1");
    assert_eq!(code(&run(&["verify", "--lemma", "dprime", "--family", "path", "--n", "4", "--set", "9"])), 2);
}

#[test]
fn verify_recurrence() {
    let out = run(&["verify", "--lemma", "e-rec", "--family", "cycle", "--n", "6"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["failures"], "0");
}

#[test]
fn verify_concavity_bound_on_star() {
    let out = run(&["verify", "--lemma", "2.4", "--family", "star", "--n", "9"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["results"]["instances"][0]["k"], "5");
    assert_eq!(v["results"]["all_hold"], true);
}

#[test]
fn verify_concavity_bound_failure_exits_nonzero() {
    // the bound fails at K_6, k = 3: 4 < 5
    let out = run(&["verify", "--lemma", "concavity-bound", "--family", "complete", "--n", "6"]);
    assert_eq!(code(&out), 1);
    let entry = &json(&out)["results"]["instances"][0];
    assert_eq!(entry["lhs"]["exact"], "4/1");
    assert_eq!(entry["rhs"]["exact"], "5/1");
    assert_eq!(entry["coefficient_step_holds"], false);
}

#[test]
fn check_tail_condition_auto_params() {
    let out = run(&["check-theorem", "--theorem", "1.4", "--n", "8192", "--h", "1", "--auto-params"]);
    assert_eq!(code(&out), 0);
    let r = &json(&out)["results"];
    assert_eq!(r["holds"], true);
    assert_eq!(r["k"], "4110");
    assert_eq!(r["alpha"], "26");
}

#[test]
fn check_concavity_condition_auto_params() {
    let out = run(&["check-theorem", "--theorem", "concavity", "--n", "8192", "--auto-params"]);
    assert_eq!(code(&out), 0);
    let r = &json(&out)["results"];
    assert_eq!(r["holds"], true);
    assert_eq!((r["k"].as_str(), r["alpha"].as_str()), (Some("4096"), Some("39")));
}

#[test]
fn check_condition_with_explicit_coefficient() {
    let out =
        run(&["check-theorem", "--theorem", "1.4", "--n", "10", "--h", "10", "--k", "8", "--alpha", "1", "--dk", "45"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["rhs_over_binomial"]["exact"], "20/63");
    let bad = run(&["check-theorem", "--theorem", "1.4", "--n", "10", "--k", "8", "--alpha", "1", "--dk", "x"]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn check_rejects_out_of_range_parameters() {
    let out = run(&["check-theorem", "--theorem", "1.5", "--n", "16", "--k", "20", "--alpha", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("k = 20"), "{}", stderr(&out));
    assert_eq!(code(&run(&["check-theorem", "--theorem", "1.5", "--n", "16", "--k", "20"])), 2);
}

#[test]
fn check_construction_chain_reports_each_link() {
    let out = run(&["check-theorem", "--theorem", "construction", "--n", "1048576"]);
    let v = json(&out);
    let links = v["results"]["links"].as_array().unwrap();
    assert_eq!(v["results"]["degree"], "24");
    assert_eq!(strings(&v["results"]["ks"]), ["524288"]);
    // every link except the final comparison holds; that one is a known gap
    let failing: Vec<&str> =
        links.iter().filter(|l| l["holds"] == false).map(|l| l["name"].as_str().unwrap()).collect();
    assert_eq!(failing, ["final_comparison"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn batch_universal_graphs_on_four_vertices_are_unimodal() {
    let stream = all_labeled_graph6(4);
    let out = dompoly(&["batch", "--assert-unimodal", "--universal-only"], &stream);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let r = &json(&out)["results"];
    assert_eq!(r["graphs"], "64");
    assert_eq!(r["asserted"], "23");
    assert_eq!(r["assertion_failures"], "0");
}

#[test]
fn batch_preserves_input_order_across_workers() {
    let stream = all_labeled_graph6(5);
    let one = dompoly(&["batch", "--workers", "1"], &stream);
    let many = dompoly(&["batch", "--workers", "4"], &stream);
    assert_eq!(without_timings(&one), without_timings(&many));
    let records = json(&many)["results"]["records"].clone();
    let lines: Vec<&str> = records.as_array().unwrap().iter().map(|r| r["line"].as_str().unwrap()).collect();
    assert_eq!(lines.len(), 1024);
    assert!(lines.iter().enumerate().all(|(i, l)| *l == (i + 1).to_string()));
}

#[test]
fn batch_assertion_failure_names_the_record() {
    let out = dompoly(&["batch", "--assert-central-mode"], "Cs\n");
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("Cs"), "{}", stderr(&out));
}

#[test]
fn batch_empty_stream() {
    let out = dompoly(&["batch", "--assert-unimodal"], "");
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["results"]["graphs"], "0");
}

#[test]
fn batch_malformed_line() {
    let stream = "C~\nbad!\nCs\n";
    let out = dompoly(&["batch", "--keep-going"], stream);
    assert_ne!(code(&out), 0);
    let r = &json(&out)["results"];
    assert_eq!(r["graphs"], "2");
    assert_eq!(r["errors"][0]["line"], "2");
    let stop = dompoly(&["batch"], stream);
    assert_eq!(code(&stop), 2);
    assert!(stderr(&stop).contains("line 2"));
}

#[test]
fn sample_complete_graph() {
    let out = run(&["sample", "--family", "complete", "--n", "50", "--k", "5", "--samples", "1000", "--seed", "1"]);
    assert_eq!(code(&out), 0);
    let e = &json(&out)["results"]["estimate"];
    assert_eq!(e["point"], "1000/1000");
    assert_eq!(e["point_approx"], 1.0);
}

#[test]
fn sample_star_interval_covers_exact_ratio() {
    let out = run(&["sample", "--family", "star", "--n", "100", "--k", "10", "--samples", "100000", "--seed", "7"]);
    let e = &json(&out)["results"]["estimate"];
    let (lo, hi) = (e["ci_low"].as_f64().unwrap(), e["ci_high"].as_f64().unwrap());
    assert!(lo <= 0.1 && 0.1 <= hi, "[{lo}, {hi}]");
}

#[test]
fn sample_is_reproducible_and_compares() {
    let args = ["sample", "--family", "star", "--n", "30", "--k", "3", "--samples", "4000", "--seed", "2", "--compare"];
    let a = run(&[&args[..], &["--workers", "1"]].concat());
    let b = run(&[&args[..], &["--workers", "3"]].concat());
    assert_eq!(without_timings(&a), without_timings(&b));
    assert!(json(&a)["results"]["comparison"]["verdict"].is_string());
}

#[test]
fn sample_rejects_zero_k() {
    let out = run(&["sample", "--family", "star", "--n", "10", "--k", "0"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unknown_family_is_an_input_error() {
    let out = run(&["compute", "--family", "hypercube", "--n", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown family"));
}

#[test]
fn join_universal_and_construction_families() {
    let out = run(&["compute", "--family", "join_universal", "--base", "cycle", "--base-n", "5"]);
    assert_eq!(strings(&json(&out)["results"]["coefficients"]), ["0", "1", "10", "20", "15", "6", "1"]);
    let out = run(&["compute", "--family", "construction", "--base", "petersen"]);
    let v = json(&out);
    assert_eq!(v["results"]["analysis"]["mode"], "6");
    assert_eq!(v["input"]["vertices"], "11");
}
