//! Acceptance suite: runs every criterion and prints one pass/fail line per
//! item. Each suite is also a test so failures are attributed.

use dclaw_core::acceptance::{run_suite, SuiteReport};

fn check(name: &str) {
    let report: SuiteReport = run_suite(name).expect("known suite");
    for item in &report.items {
        let status = if item.pass { "PASS" } else { "FAIL" };
        println!("[{status}] {}::{} — {}", report.suite, item.name, item.detail);
    }
    assert!(report.passed(), "suite {name} failed");
}

#[test]
fn criterion_1_gadget_optima() {
    check("gadget-optima");
}

#[test]
fn criterion_2_budget_identities() {
    check("budget-identities");
}

#[test]
fn criterion_3_equality_transfers() {
    check("equality-transfers");
}

#[test]
fn criterion_4_dblock_optimality() {
    check("dblock-optimality");
}

#[test]
fn criterion_5_solver_agreement() {
    check("solver-agreement");
}

#[test]
fn criterion_6_structural_assertions() {
    check("structural-assertions");
}

#[test]
fn criterion_7_conclusions_substituted() {
    check("conclusions-substituted");
}
