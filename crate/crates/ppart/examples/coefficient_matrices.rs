//! The filling matrices behind power sum coefficients: the count for a pair
//! `(alpha, beta)` is the coefficient of `M[beta]` in `p[alpha]`, and the
//! overlap-constrained count gives the fundamental coefficients.
//!
//! ```bash
//! cargo run --example coefficient_matrices
//! ```

use ppart::coeff;
use ppart::composition::{Composition, Partition};
use ppart::matrices::{count_r, enumerate_q, enumerate_r, enumerate_r_symmetric};
use ppart::qsym::power_sum;

fn main() {
    let alpha: Composition = "1,2,1".parse().unwrap();
    println!("p[{alpha}] = {}\n", power_sum(&alpha).unwrap());

    for beta in ["1,2,1", "1,3"] {
        let beta: Composition = beta.parse().unwrap();
        let fillings = enumerate_r(&alpha, &beta).unwrap();
        println!("fillings for ({alpha}) -> ({beta}): {}", fillings.len());
        for m in &fillings {
            println!("{}\n", m.render_plain());
        }
    }

    // coefficients match counts for every beta
    let p = power_sum(&alpha).unwrap();
    for (beta, coefficient) in p.terms() {
        let count = count_r(&alpha, beta).unwrap();
        println!(
            "[M[{beta}]] p[{alpha}] = {} = count {count}",
            coeff::render(coefficient)
        );
    }

    // overlap fillings compute the fundamental expansion
    let beta: Composition = "1,3".parse().unwrap();
    let overlaps = enumerate_q(&alpha, &beta).unwrap();
    println!(
        "\noverlap fillings for ({alpha}) -> ({beta}): {}",
        overlaps.len()
    );
    for m in &overlaps {
        println!("{}\n", m.render_plain());
    }

    // drop the reading-word condition for symmetric functions
    let lambda: Partition = "2,1,1".parse().unwrap();
    let mu: Partition = "2,2".parse().unwrap();
    let symmetric = enumerate_r_symmetric(&lambda, &mu).unwrap();
    println!(
        "symmetric fillings for ({lambda}) -> ({mu}): {}",
        symmetric.len()
    );
    for m in &symmetric {
        println!("{}\n", m.render_plain());
    }
}
