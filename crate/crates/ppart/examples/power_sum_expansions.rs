//! Expanding combinatorial power sums into the monomial and fundamental
//! bases, together with the chain sums defining them.
//!
//! ```bash
//! cargo run --example power_sum_expansions
//! ```

use ppart::composition::{Composition, Partition};
use ppart::qsym::{
    chain_to_m, power_sum, power_sum_chains, power_sum_to_f, reverse_power_sum, symmetric_power_sum,
};

fn main() {
    let alpha: Composition = "1,1,2".parse().unwrap();
    println!("p[{alpha}] = {}", power_sum(&alpha).unwrap());

    // the expansion is a sum of chain generating functions, one per linear
    // extension of the weight antichain with weight word alpha
    for chain in power_sum_chains(&alpha).unwrap() {
        println!("    chain {chain}  ->  {}", chain_to_m(&chain, false));
    }

    let alpha: Composition = "1,2,1".parse().unwrap();
    println!("\np[{alpha}] = {}", power_sum(&alpha).unwrap());
    println!(
        "p[{alpha}] = {}  (fundamental basis)",
        power_sum_to_f(&alpha).unwrap()
    );

    // reverse power sums use the dual label order
    println!("\npr[{alpha}] = {}", reverse_power_sum(&alpha).unwrap());

    // summing over all rearrangements of a partition recovers the symmetric
    // power sum, whose coefficients are constant on rearrangement classes
    let lambda: Partition = "2,1,1".parse().unwrap();
    println!("\nsum over rearrangements of {lambda}:");
    println!("    {}", symmetric_power_sum(&lambda).unwrap());
    for beta in lambda.rearrangements() {
        println!("    p[{beta}] = {}", power_sum(&beta).unwrap());
    }
}
