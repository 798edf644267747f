use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn spex(args: &[&str], stdin: Option<&str>, threads: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_spex"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    if let Some(t) = threads {
        cmd.env("SPEX_THREADS", t);
    }
    let mut child = cmd.spawn().unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_extremal_graph6() {
    // reference string produced by an independent graph6 writer
    let o = spex(&["build", "extremal", "--n", "8", "--k", "0", "--out", "g6"], None, None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "G~vME?\n");
    let o = spex(&["build", "extremal(8,0)"], None, None);
    assert_eq!(stdout(&o), "G~vME?\n");
}

#[test]
fn build_edge_list_round_trips_through_rho() {
    let o = spex(&["build", "k2+[4,1,1]", "--out", "edges"], None, None);
    let edges = stdout(&o);
    assert!(edges.starts_with("8\n"));
    assert_eq!(edges.lines().count(), 17);
    let a = spex(&["rho", "-"], Some(&edges), None);
    let b = spex(&["rho", "G~vME?"], None, None);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn rho_of_k2_18() {
    let o = spex(&["rho", "K2,18"], None, None);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["rho"].as_f64().unwrap() - 6.0).abs() < 1e-12);
    assert!(v["residual"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn rho_emits_perron_vector() {
    let o = spex(&["rho", "C5", "--emit-vector"], None, None);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("vertex,x"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn member_from_stdin() {
    let o = spex(&["member", "--k", "0"], Some("G~vME?\n"), None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"member\":true,\"witness\":8}\n");
    let o = spex(&["member", "--k", "0", "k2+[6]"], None, None);
    assert_eq!(stdout(&o), "{\"member\":false,\"witness\":null}\n");
    let o = spex(&["member", "--k", "0", "K5"], None, None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spectrum_json_shape() {
    let o = spex(&["spectrum", "K2,8"], None, None);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 8);
    let present: Vec<u64> = arr
        .iter()
        .filter(|e| e["status"] == "present")
        .map(|e| e["ell"].as_u64().unwrap())
        .collect();
    assert_eq!(present, [4]);
    assert!(arr.iter().all(|e| e["status"] != "present" || e["certificate"].is_array()));
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = spex(
        &["verify", "lemma1", "--n", "40", "--a1", "2", "--a2", "1", "--l1", "34,2,2", "--l2", "36,2"],
        None,
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["holds"], "certified");
    assert_eq!(v["dominating_edge"], false);

    // the two ends of P2 carry equal entries, so the short-path checks fail
    let o = spex(&["verify", "claim33", "--n", "300", "--k", "0", "--n1", "296", "--n2", "2"], None, None);
    assert_eq!(o.status.code(), Some(1));

    let o = spex(&["verify", "lemma2", "--n", "100", "--k", "0", "--n1", "49", "--n2", "49"], None, None);
    assert_eq!(o.status.code(), Some(2));
    let o = spex(&["verify", "lemma2", "--n", "100", "--k", "0", "--n1", "49", "--n2", "49", "--force"], None, None);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["within_hypothesis"], false);
}

#[test]
fn csv_margin_table() {
    let o = spex(
        &["verify", "entry-bounds", "--n", "20", "--forest", "18", "--format", "csv"],
        None,
        None,
    );
    let text = stdout(&o);
    assert!(text.starts_with("check_id,params,holds,margin,value\n"));
    assert!(text.lines().skip(1).all(|l| l.starts_with("entry-bounds,")));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(spex(&["rho", "P3", "extra"], None, None).status.code(), Some(2));
    assert_eq!(spex(&["rho", "P3", "--bogus"], None, None).status.code(), Some(2));
    assert_eq!(spex(&["rho", "P3", "--tol", "0"], None, None).status.code(), Some(2));
    assert_eq!(spex(&["rho", "not-a-graph"], None, None).status.code(), Some(2));
    assert_eq!(spex(&["spectrum", "--budget", "0", "K4"], None, None).status.code(), Some(2));
    assert_eq!(spex(&["frobnicate"], None, None).status.code(), Some(2));
    assert_eq!(spex(&["sweep", "argmax", "--n", "30", "--k", "0"], None, Some("zero")).status.code(), Some(2));
}

#[test]
fn every_subcommand_has_help() {
    for args in [
        vec!["--help"],
        vec!["build", "--help"],
        vec!["rho", "--help"],
        vec!["spectrum", "--help"],
        vec!["member", "--help"],
        vec!["verify", "lemma1", "--help"],
        vec!["verify", "claim33", "--help"],
        vec!["sweep", "argmax", "--help"],
        vec!["selftest", "--help"],
    ] {
        let o = spex(&args, None, None);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains("Usage"));
    }
}

#[test]
fn sweeps_are_identical_across_worker_counts() {
    let args = ["sweep", "argmax", "--n", "40", "--k", "0", "--force"];
    let one = spex(&args, None, Some("1"));
    let four = spex(&args, None, Some("4"));
    assert_eq!(one.status.code(), four.status.code());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, spex(&args, None, Some("4")).stdout);

    let args = ["sweep", "entry-bounds", "--samples", "20", "--seed", "3", "--format", "csv"];
    assert_eq!(spex(&args, None, Some("1")).stdout, spex(&args, None, Some("3")).stdout);
}

#[test]
fn lna_listing() {
    let o = spex(&["sweep", "lna", "--n", "6", "--a", "1"], None, None);
    assert_eq!(stdout(&o), "[3,1]\n[2,2]\n");
}

#[test]
fn selftest_passes() {
    let o = spex(&["selftest"], None, None);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
}
