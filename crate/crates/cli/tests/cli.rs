//! End-to-end checks of the dclaw binary: exit-code contract, report shape,
//! round trips through the text formats.

use std::path::Path;
use std::process::{Command, Output};

fn dclaw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dclaw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn solve_p3_optimizes() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.graph", "3 2\n0 1\n1 2\n");
    let out = dclaw(&["solve", &p3, "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["result"]["size"], 1);
    assert_eq!(report["result"]["certified_optimal"], true);
}

#[test]
fn solve_decision_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.graph", "3 2\n0 1\n1 2\n");
    let no = dclaw(&["solve", &p3, "--d", "2", "--k", "0"]);
    assert_eq!(no.status.code(), Some(4));
    assert_eq!(stdout_json(&no)["decision"]["feasible"], false);

    let yes = dclaw(&["solve", &p3, "--d", "2", "--k", "1"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout_json(&yes)["decision"]["feasible"], true);
}

#[test]
fn structured_output_is_stable_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.graph", "3 2\n0 1\n1 2\n");
    let a = dclaw(&["solve", &p3, "--d", "2"]);
    let b = dclaw(&["solve", &p3, "--d", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn solve_parse_error_is_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.graph", "3 2\n0 1\n");
    let out = dclaw(&["solve", &bad, "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.path().join("nope.graph");
    let out = dclaw(&["solve", missing.to_str().unwrap(), "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_forced_algorithm_precondition_is_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    // pendant 5-cycle: not a 3-block graph
    let g = write(dir.path(), "c5p.graph", "6 6\n0 1\n0 4\n0 5\n1 2\n2 3\n3 4\n");
    let out = dclaw(&["solve", &g, "--d", "3", "--algo", "dblock"]);
    assert_eq!(out.status.code(), Some(3));

    let out = dclaw(&["solve", &g, "--d", "3", "--algo", "complete-bipartite"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write(dir.path(), "p3.graph", "3 2\n0 1\n1 2\n");
    let good = write(dir.path(), "good.set", "1\n");
    let empty = write(dir.path(), "empty.set", "");
    let bad = write(dir.path(), "bad.set", "7\n");

    let out = dclaw(&["verify", &p3, &good, "--d", "2"]);
    assert_eq!(out.status.code(), Some(0));

    let out = dclaw(&["verify", &p3, &empty, "--d", "2"]);
    assert_eq!(out.status.code(), Some(4));
    let report = stdout_json(&out);
    assert_eq!(report["witness"]["center"], 1);

    let out = dclaw(&["verify", &p3, &bad, "--d", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn recognize_classes() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.graph", "3 3\n0 1\n0 2\n1 2\n");
    let c5 = write(dir.path(), "c5.graph", "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");

    let out = dclaw(&["recognize", &k3, "--class", "bipartite"]);
    assert_eq!(out.status.code(), Some(4));

    let out = dclaw(&["recognize", &k3, "--class", "dblock:2"]);
    assert_eq!(out.status.code(), Some(0));

    let out = dclaw(&["recognize", &k3, "--class", "block"]);
    assert_eq!(out.status.code(), Some(0));

    let out = dclaw(&["recognize", &c5, "--class", "split"]);
    assert_eq!(out.status.code(), Some(4));

    let out = dclaw(&["recognize", &c5, "--class", "frobnicated"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_nae_cvd_writes_budget() {
    let dir = tempfile::tempdir().unwrap();
    let formula = write(dir.path(), "f.nae", "3 1\n1 2 3\n");
    let prefix = dir.path().join("out");
    let out = dclaw(&["reduce", "--from", "nae-cvd", &formula, prefix.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["output"]["budget_k"], 17);

    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(prefix.with_extension("json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["budget_k"], 17);
    assert_eq!(sidecar["d"], 2);

    // written graph re-parses and is bipartite
    let graph_path = prefix.with_extension("graph");
    let check = dclaw(&["recognize", graph_path.to_str().unwrap(), "--class", "bipartite"]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn reduce_precondition_failures_are_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.graph", "3 3\n0 1\n0 2\n1 2\n");
    let prefix = dir.path().join("out");
    let out = dclaw(&["reduce", "--from", "diam3-bip", &k3, prefix.to_str().unwrap(), "--d", "2"]);
    assert_eq!(out.status.code(), Some(3));

    let intersecting = write(dir.path(), "h.hg", "3 3 2\n0 1\n1 2\n0 2\n");
    let out = dclaw(&["reduce", "--from", "hvc-split", &intersecting, prefix.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn gen_is_deterministic_and_round_trips() {
    let a = dclaw(&["gen", "--model", "gnp", "--n", "8", "--p", "0.3", "--seed", "1"]);
    let b = dclaw(&["gen", "--model", "gnp", "--n", "8", "--p", "0.3", "--seed", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "g.graph", std::str::from_utf8(&a.stdout).unwrap());
    let solved = dclaw(&["solve", &path, "--d", "3"]);
    assert_eq!(solved.status.code(), Some(0));
}

#[test]
fn suite_lists_and_rejects_unknown() {
    let out = dclaw(&["suite", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("gadget-optima"));

    let out = dclaw(&["suite", "frobnicated"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn suite_gadget_optima_passes() {
    let out = dclaw(&["suite", "gadget-optima"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["reports"][0]["passed"], true);
}

#[test]
fn solve_hj_budget_seven_is_no() {
    // the claw clause half-gadget needs at least 8 deletions
    let dir = tempfile::tempdir().unwrap();
    let hj = dclaw_core::gadgets::build_claw_aux_hj();
    let path = write(dir.path(), "hj.graph", &dclaw_core::io::format_edge_list(&hj.graph));

    let no = dclaw(&["solve", &path, "--d", "3", "--k", "7"]);
    assert_eq!(no.status.code(), Some(4));
    let yes = dclaw(&["solve", &path, "--d", "3", "--k", "8"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout_json(&yes)["result"]["size"], 8);
}

#[test]
fn reduce_nae_claw_records_budget() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("claw");
    let formula = write(dir.path(), "f.nae", "3 1\n1 2 3\n");
    let out = dclaw(&["reduce", "--from", "nae-claw", &formula, prefix.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(prefix.with_extension("json")).unwrap())
            .unwrap();
    assert_eq!(sidecar["budget_k"], 22);
    assert_eq!(sidecar["d"], 3);
}
