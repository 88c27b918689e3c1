//! Acceptance suite: every criterion runs at its pinned tolerance and prints
//! one PASS/FAIL line (plus per-check details). Time budgets are asserted
//! alongside correctness.

use std::time::Duration;

use toda_core::verify::{self as v, CriterionReport, DEFAULT_SEED};

fn seed() -> u64 {
    std::env::var("TODA_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

fn check(report: CriterionReport, budget: Duration) {
    print!("{}", report.render());
    assert!(
        report.passed(),
        "criterion {} failed:\n{}",
        report.id,
        report.render()
    );
    assert!(
        report.elapsed <= budget,
        "criterion {} exceeded its {budget:.2?} budget: {:.2?}",
        report.id,
        report.elapsed
    );
}

#[test]
fn criterion_1_darboux_polynomials() {
    check(v::criterion_1_darboux(), Duration::from_secs(1));
}

#[test]
fn criterion_2_named_potential_coefficients() {
    check(v::criterion_2_named_potentials(), Duration::from_secs(5));
}

#[test]
fn criterion_3_painleve_residuals() {
    check(v::criterion_3_painleve(), Duration::from_secs(30));
}

#[test]
fn criterion_4_kdv_identification() {
    check(v::criterion_4_kdv(), Duration::from_secs(5));
}

#[test]
fn criterion_5_solitonic_spectra() {
    check(v::criterion_5_solitonic_spectra(), Duration::from_secs(5));
}

#[test]
fn criterion_6_perskew_suite() {
    check(v::criterion_6_perskew(seed()), Duration::from_secs(30));
}

#[test]
fn criterion_7_simulation() {
    check(v::criterion_7_simulation(), Duration::from_secs(60));
}

#[test]
fn criterion_8_pole_dynamics() {
    check(v::criterion_8_pole_dynamics(), Duration::from_secs(30));
}

#[test]
fn criterion_9_formal_series() {
    check(v::criterion_9_formal_series(), Duration::from_secs(10));
}
