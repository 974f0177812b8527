//! The acceptance gate: one test per suite criterion, each printing a single
//! PASS/FAIL line with the number of checks performed.

use grouplab::suite::{self, CriterionResult, SuiteConfig};

fn gate(result: CriterionResult) {
    if result.passed {
        println!("PASS {} ({} checks)", result.name, result.checks);
    } else {
        println!("FAIL {} — {}", result.name, result.detail);
    }
    assert!(result.passed, "{}: {}", result.name, result.detail);
}

#[test]
fn fitting_equivalence() {
    gate(suite::criterion_fitting(&SuiteConfig::default()));
}

#[test]
fn dichotomy() {
    gate(suite::criterion_dichotomy(&SuiteConfig::default()));
}

#[test]
fn sum_closure() {
    gate(suite::criterion_sum_closure(&SuiteConfig::default()));
}

#[test]
fn uniqueness() {
    gate(suite::criterion_uniqueness(&SuiteConfig::default()));
}

#[test]
fn cancellation() {
    gate(suite::criterion_cancellation(&SuiteConfig::default()));
}

#[test]
fn verbal_product_compatibility() {
    gate(suite::criterion_verbal_product(&SuiteConfig::default()));
}

#[test]
fn w_bound() {
    gate(suite::criterion_wbound(&SuiteConfig::default()));
}

#[test]
fn fiber_power_shadow() {
    gate(suite::criterion_fiber_shadow(&SuiteConfig::default()));
}

#[test]
fn oracle_equivalence() {
    gate(suite::criterion_oracles(&SuiteConfig::default()));
}
