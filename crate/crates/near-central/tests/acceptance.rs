//! The seven headline guarantees at full strength. Each criterion runs
//! as its own test, so `cargo test --test acceptance` prints one
//! pass/fail line per criterion; the `details` of a failing suite name
//! the first offending comparisons.

use near_central::verify::{run_suite, VerifyConfig};

fn gate(name: &str) {
    let config = VerifyConfig { n_max: 8, max_brute_n: 8 };
    let report = run_suite(name, &config).expect("known suite");
    println!("{}", report.line());
    assert!(report.passed, "{}", report.line());
}

#[test]
fn criterion_1_generalized_characters_cross_validated() {
    gate("generalized-characters");
}

#[test]
fn criterion_2_idempotents_resolve_the_identity() {
    gate("idempotents");
}

#[test]
fn criterion_3_connection_coefficients_match_brute_force() {
    gate("connection-coefficients");
}

#[test]
fn criterion_4_dipole_counts_match_brute_force() {
    gate("dipole-counts");
}

#[test]
fn criterion_5_genus_distribution_symmetry() {
    gate("genus-symmetry");
}

#[test]
fn criterion_6_cycle_decompositions_match_brute_force() {
    gate("cycle-decompositions");
}

#[test]
fn criterion_7_identity_suite() {
    gate("identity-suite");
}
