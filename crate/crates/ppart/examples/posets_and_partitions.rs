//! Building weighted labelled posets, enumerating their linear extensions,
//! lower sets and P-partitions, and evaluating their generating functions.
//!
//! ```bash
//! cargo run --example posets_and_partitions
//! ```

use ppart::poset::{LabelledInteger, WeightedLabelledPoset};
use ppart::ppartition::{enumerate_ppartitions, k_truncated};

fn main() {
    // the same poset, built from covers and parsed from the text format
    let a = LabelledInteger::new(1, 1).unwrap();
    let b = LabelledInteger::new(1, 2).unwrap();
    let top = LabelledInteger::new(2, 1).unwrap();
    let built =
        WeightedLabelledPoset::naturally_weighted(&[a, b, top], &[(a, top), (b, top)], false)
            .unwrap();
    let parsed = WeightedLabelledPoset::from_text(
        "elements: 1_1, 1_2, 2_1\ncovers: 1_1<2_1; 1_2<2_1\ndualized: false\n",
    )
    .unwrap();
    assert_eq!(built, parsed);

    println!("linear extensions:");
    for ext in built.linear_extensions().unwrap() {
        println!("    {ext}");
    }

    println!("lower sets:");
    for set in built.lower_sets().unwrap() {
        let labels: Vec<String> = set.iter().map(|&i| built.label_of(i).to_string()).collect();
        println!("    {{{}}}", labels.join(", "));
    }

    // assignments into {1, 2, 3}; both covers are label descents here, so
    // the inequalities are strict
    println!("P-partitions into [3]:");
    for f in enumerate_ppartitions(&built, 3) {
        let rendered: Vec<String> = f
            .values()
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{}->{v}", built.label_of(i)))
            .collect();
        println!("    {}", rendered.join(" "));
    }

    // the generating function, truncated to four variables
    println!("K truncated to 4 variables:");
    println!("    {}", k_truncated(&built, 4));

    // dualizing the labels swaps strict and weak edges
    let dual_labels = built.dual_labelling();
    println!(
        "with the dual labelling there are {} P-partitions into [3]",
        enumerate_ppartitions(&dual_labels, 3).len()
    );
}
