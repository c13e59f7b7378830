//! Products, coproducts and involutions on the power sum bases: the closed
//! shuffle and deconcatenation rules next to the oracle computations they
//! are checked against.
//!
//! ```bash
//! cargo run --example hopf_operations
//! ```

use ppart::composition::Composition;
use ppart::hopf::{
    coproduct_m, coproduct_power_sum, multiply, multiply_power_sums, omega, psi, rho,
};
use ppart::qsym::{power_sum, reverse_power_sum};

fn main() {
    let alpha: Composition = "2".parse().unwrap();
    let beta: Composition = "1,1".parse().unwrap();

    // shuffle rule: p[a] p[b] = (z_a z_b / z_{a.b}) sum over shuffles
    let rule = multiply_power_sums(&alpha, &beta).unwrap();
    println!("p[{alpha}] * p[{beta}] = {rule}");

    // the same product through the truncation oracle, in the monomial basis
    let oracle = multiply(&power_sum(&alpha).unwrap(), &power_sum(&beta).unwrap()).unwrap();
    println!("                     = {oracle}");
    assert_eq!(rule.to_m(), oracle);

    // deconcatenation rule for the coproduct
    let gamma: Composition = "1,2,1".parse().unwrap();
    let rule = coproduct_power_sum(&gamma);
    println!("\ncoproduct of p[{gamma}]:");
    println!("    {rule}");
    assert_eq!(rule.to_m(), coproduct_m(&power_sum(&gamma).unwrap()));

    // the involutions act by sign and reversal on the power sum bases
    let p = power_sum(&gamma).unwrap();
    let n = gamma.size();
    let sign: i64 = if (n as i64 - gamma.len() as i64) % 2 == 0 {
        1
    } else {
        -1
    };
    println!("\npsi(p[{gamma}]) = {}", psi(&p));
    println!(
        "which is {sign} * pr[{gamma}] = {sign} * ({})",
        reverse_power_sum(&gamma).unwrap()
    );
    println!("rho(p[{gamma}]) = pr[{}] = {}", gamma.reverse(), rho(&p));
    println!(
        "omega(p[{gamma}]) = {sign} * p[{}] = {}",
        gamma.reverse(),
        omega(&p)
    );
}
