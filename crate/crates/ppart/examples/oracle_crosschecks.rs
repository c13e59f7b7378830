//! The brute-force oracles at work: truncated evaluation determines a
//! quasisymmetric function exactly, P-partitions split across linear
//! extensions, and the verification suites replay whole identity families.
//!
//! ```bash
//! cargo run --example oracle_crosschecks
//! ```

use ppart::composition::{Composition, Partition};
use ppart::poset::WeightedLabelledPoset;
use ppart::ppartition::{enumerate_ppartitions, k_truncated, m_truncated, qsym_from_truncation};
use ppart::qsym::{power_sum, symmetric_power_sum};
use ppart::verify::{run_suite, worked_examples};

fn main() {
    // a degree-n quasisymmetric function is pinned by its evaluation in n
    // variables: evaluate and read back
    let alpha: Composition = "1,2,1".parse().unwrap();
    let p = power_sum(&alpha).unwrap();
    let truncated = m_truncated(&p, 4);
    println!(
        "p[{alpha}] evaluated in 4 variables has {} monomials",
        truncated.num_terms()
    );
    let back = qsym_from_truncation(&truncated, 4).unwrap();
    assert_eq!(back, p);
    println!("read back: {back}");

    // the weight antichain's generating function is the symmetric power sum
    let lambda: Partition = "2,1".parse().unwrap();
    let antichain = WeightedLabelledPoset::antichain(&lambda);
    let from_poset = qsym_from_truncation(&k_truncated(&antichain, 3), 3).unwrap();
    assert_eq!(from_poset, symmetric_power_sum(&lambda).unwrap());
    println!("\nK of the {lambda} antichain = {from_poset}");

    // P-partitions of a poset split exactly across its linear extensions
    let poset =
        WeightedLabelledPoset::from_text("elements: 1_1, 1_2, 2_1\ncovers: 1_1<2_1\n").unwrap();
    let whole = enumerate_ppartitions(&poset, 3).len();
    let split: usize = poset
        .linear_extensions()
        .unwrap()
        .iter()
        .map(|ext| enumerate_ppartitions(&poset.extension_poset(ext).unwrap(), 3).len())
        .sum();
    println!("\n{whole} P-partitions = {split} summed across extensions");
    assert_eq!(whole, split);

    // suites bundle these comparisons into exhaustive families
    let records = run_suite("matrices", 4).unwrap();
    let passed = records.iter().filter(|r| r.passed()).count();
    println!(
        "\nmatrix suite at degree 4: {passed}/{} checks pass",
        records.len()
    );

    let examples = worked_examples();
    println!(
        "built-in worked examples: {}/{} reproduce exactly",
        examples.iter().filter(|r| r.passed()).count(),
        examples.len()
    );
}
