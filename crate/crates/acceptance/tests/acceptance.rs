//! One test per acceptance criterion. Each prints a single `PASS`/`FAIL` line.
//!
//! Limits are pinned inside the runners in `bcframe::selftest`; the test only reports them.
//! Lines go straight to the stderr handle, which the test harness does not capture.

use std::io::Write;

use bcframe::selftest::{self, CriterionResult, DEFAULT_SEED};

fn report(r: CriterionResult) {
    let mut text = format!("{}\n", r.line());
    for n in &r.notes {
        text.push_str(&format!("    {n}\n"));
    }
    std::io::stderr().write_all(text.as_bytes()).expect("stderr is writable");
    assert!(r.passed, "criterion {} failed: {:?}", r.id, r.notes);
}

#[test]
fn criterion_01_bound_composition() {
    report(selftest::criterion_1(DEFAULT_SEED));
}

#[test]
fn criterion_02_weighted_onb() {
    report(selftest::criterion_2(DEFAULT_SEED));
}

#[test]
fn criterion_03_schwarz() {
    report(selftest::criterion_3(DEFAULT_SEED));
}

#[test]
fn criterion_04_exactness() {
    report(selftest::criterion_4(DEFAULT_SEED));
}

#[test]
fn criterion_05_frame_operator() {
    report(selftest::criterion_5(DEFAULT_SEED));
}

#[test]
fn criterion_06_painless() {
    report(selftest::criterion_6(DEFAULT_SEED));
}

#[test]
fn criterion_07a_critical_density() {
    report(selftest::criterion_7a(DEFAULT_SEED));
}

#[test]
fn criterion_07b_non_critical_exact() {
    report(selftest::criterion_7b(DEFAULT_SEED, 8));
}

#[test]
fn criterion_08_psi_system() {
    report(selftest::criterion_8(DEFAULT_SEED));
}

#[test]
fn criterion_09_algebra() {
    report(selftest::criterion_9(DEFAULT_SEED));
}

#[test]
fn criterion_10_norm_identities() {
    report(selftest::criterion_10(DEFAULT_SEED));
}
