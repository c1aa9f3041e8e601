//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line and asserting at the stated tolerance. Seed 42 throughout.

use holorect::verify::{run_all, run_criterion};

const SEED: u64 = 42;

fn check(id: usize) {
    let c = run_criterion(id, SEED);
    println!(
        "{:>2} {} {}: {}",
        c.id,
        if c.passed { "PASS" } else { "FAIL" },
        c.name,
        c.detail
    );
    assert!(c.passed, "criterion {} ({}) failed: {}", c.id, c.name, c.detail);
}

#[test]
fn criterion_01_rho_reproduction() {
    check(1);
}

#[test]
fn criterion_02_cauchy_theorem() {
    check(2);
}

#[test]
fn criterion_03_rectangle_independence() {
    check(3);
}

#[test]
fn criterion_04_cauchy_formulas() {
    check(4);
}

#[test]
fn criterion_05_winding_suite() {
    check(5);
}

#[test]
fn criterion_06_component_constancy() {
    check(6);
}

#[test]
fn criterion_07_argument_principle() {
    check(7);
}

#[test]
fn criterion_08_maximum_modulus() {
    check(8);
}

#[test]
fn criterion_09_derivative_continuity() {
    check(9);
}

#[test]
fn criterion_10_covering_lemma() {
    check(10);
}

#[test]
fn criterion_11_determinism() {
    let first = run_all(SEED);
    let second = run_all(SEED);
    let identical = first == second && first.render() == second.render();
    println!(
        "11 {} determinism: two seed-{SEED} runs {}",
        if identical { "PASS" } else { "FAIL" },
        if identical { "render identically" } else { "diverge" }
    );
    assert!(identical, "reports for seed {SEED} differ");
    assert!(first.all_passed(), "underlying criteria failed:\n{}", first.render());
}
