//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! and enforcing its runtime budget. Every comparison is exact.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use ppart::verify::{
    coproduct_suite, fundamental_lemma_suite, involution_suite, matrix_suite, positivity_suite,
    product_suite, refinement_suite, worked_examples, CheckRecord,
};

fn assert_all_pass(criterion: &str, records: &[CheckRecord], budget_ms: u128, start: Instant) {
    let elapsed = start.elapsed().as_millis();
    let failures: Vec<&CheckRecord> = records.iter().filter(|r| !r.passed()).collect();
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "acceptance {criterion}: {status} ({} checks, {elapsed} ms, budget {budget_ms} ms)",
        records.len()
    );
    for failure in &failures {
        println!(
            "    {}\n        expected: {}\n        actual:   {}",
            failure.name, failure.expected, failure.actual
        );
    }
    assert!(
        failures.is_empty(),
        "{criterion}: {} of {} checks failed",
        failures.len(),
        records.len()
    );
    assert!(
        elapsed < budget_ms,
        "{criterion}: took {elapsed} ms, budget is {budget_ms} ms"
    );
}

/// Criterion 1: the built-in worked examples reproduce exactly, including
/// the chain summands and the displayed filling matrices.
#[test]
fn criterion_1_worked_example_exactness() {
    let start = Instant::now();
    let records = worked_examples();
    // the four headline expansions must be among the checks, with exact
    // frozen expected values
    let expect = |name: &str, value: &str| {
        let record = records
            .iter()
            .find(|r| r.name == name)
            .unwrap_or_else(|| panic!("missing worked example `{name}`"));
        assert_eq!(record.expected, value, "frozen value changed for `{name}`");
        assert_eq!(record.actual, value, "`{name}` does not reproduce");
    };
    expect(
        "p[2,1,1] monomial expansion",
        "2*M[1,1,2] + 2*M[1,2,1] + 2*M[1,3] + 2*M[2,1,1] + 2*M[2,2] + 2*M[3,1] + 1*M[4]",
    );
    expect("p[1,1,2] monomial expansion", "2*M[1,1,2] + 1*M[2,2]");
    expect("chains of p[1,1,2]", "1_1 1_2 2_1; 1_2 1_1 2_1");
    expect("expansion of chain 1_1 1_2 2_1", "1*M[1,1,2]");
    expect("expansion of chain 1_2 1_1 2_1", "1*M[1,1,2] + 1*M[2,2]");
    expect("p[1,2,1] monomial expansion", "2*M[1,2,1] + 2*M[1,3]");
    expect(
        "fillings (1,2,1)->(1,2,1)",
        ". 1 . / 2 . . / . . 1; . . 1 / 2 . . / . 1 .",
    );
    expect("fillings (1,2,1)->(1,3)", ". 1 . / 2 . 1; . . 1 / 2 1 .");
    expect("p[1,2,1] fundamental expansion", "-2*F[1,1,2] + 2*F[1,3]");
    expect(
        "overlap fillings (1,2,1)->(1,3)",
        ". 1 . / 2 . 1; . . 1 / 2 1 .",
    );
    assert_all_pass("criterion 1 (worked examples)", &records, 1_000, start);
}

/// Criterion 2: the fundamental lemma over every poset on up to 4 elements
/// plus the fixed five-element family, with N <= 3, as exact multiset
/// equality of assignments.
#[test]
fn criterion_2_fundamental_lemma_oracle() {
    let start = Instant::now();
    let records = fundamental_lemma_suite(5);
    assert_all_pass("criterion 2 (fundamental lemma)", &records, 30_000, start);
}

/// Criterion 3: filling-matrix counts equal directly computed coefficients
/// for every pair of compositions (resp. partitions) of each n <= 6, and
/// the overlap formula reproduces the fundamental expansion.
#[test]
fn criterion_3_matrix_count_equivalence() {
    let start = Instant::now();
    let records = matrix_suite(6);
    assert_all_pass("criterion 3 (matrix counts)", &records, 60_000, start);
}

/// Criterion 4: the shuffle product rule equals the truncation-oracle
/// product for all pairs of total degree <= 6, and the deconcatenation
/// coproduct rule equals the coproduct of the monomial expansion, itself
/// validated against the doubled-alphabet oracle on chains of <= 4 elements.
#[test]
fn criterion_4_hopf_structure() {
    let start = Instant::now();
    let mut records = product_suite(6);
    records.extend(coproduct_suite(6));
    assert_all_pass("criterion 4 (hopf structure)", &records, 120_000, start);
}

/// Criterion 5: the six involution identities together with involutivity
/// and the commuting diagram, on both power sum bases, for all n <= 7.
#[test]
fn criterion_5_involutions() {
    let start = Instant::now();
    let records = involution_suite(7);
    assert_all_pass("criterion 5 (involutions)", &records, 60_000, start);
}

/// Criterion 6: monomial expansions of the power sums are nonnegative
/// integral, supported on coarsenings, and have full-part coefficient 1
/// exactly on partitions, for all n <= 7.
#[test]
fn criterion_6_positivity_triangularity() {
    let start = Instant::now();
    let records = positivity_suite(7);
    assert_all_pass("criterion 6 (positivity)", &records, 10_000, start);
}

/// Criterion 7: rearrangement sums of power sums are symmetric and equal
/// the weight antichain generating function, for all partitions of n <= 6.
#[test]
fn criterion_7_refinement() {
    let start = Instant::now();
    let records = refinement_suite(6);
    assert_all_pass("criterion 7 (refinement)", &records, 30_000, start);
}
