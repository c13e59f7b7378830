//! Exhaustive verification suites.
//!
//! Each suite re-derives a family of identities two independent ways and
//! compares exactly: closed-form rules against the brute-force oracles, and
//! matrix counts against directly computed coefficients. Suites run
//! exhaustively over all compositions, partitions or posets up to the given
//! bound; the spaces are tiny at desk scale and exhaustiveness is the point.

use std::collections::BTreeMap;

use crate::coeff::{self, Coeff};
use crate::composition::{Composition, Partition};
use crate::hopf::{
    coproduct_m, coproduct_oracle, coproduct_power_sum, multiply, multiply_power_sums, omega, psi,
    rho, tensor_truncated,
};
use crate::matrices::{count_q, count_r, count_r_symmetric, enumerate_q, enumerate_r};
use crate::poset::{LabelledInteger, WeightedLabelledPoset};
use crate::ppartition::{
    enumerate_ppartitions, k_truncated, qsym_from_truncation, two_alphabet_truncation, PPartition,
};
use crate::qsym::{
    chain_to_m, m_to_f, monomial_symmetric, poset_to_m, power_sum, power_sum_chains,
    power_sum_to_f, reverse_power_sum, symmetric_power_sum, QSymElement,
};

/// One comparison: passes when `expected` and `actual` agree byte for byte.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub expected: String,
    pub actual: String,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

/// Equality check with compact output: matching values record as `equal`,
/// mismatches carry both renderings.
fn eq_check<T: PartialEq + std::fmt::Display>(name: String, lhs: &T, rhs: &T) -> CheckRecord {
    if lhs == rhs {
        CheckRecord {
            name,
            expected: "equal".to_string(),
            actual: "equal".to_string(),
        }
    } else {
        CheckRecord {
            name,
            expected: lhs.to_string(),
            actual: rhs.to_string(),
        }
    }
}

fn value_check(name: &str, expected: &str, actual: String) -> CheckRecord {
    CheckRecord {
        name: name.to_string(),
        expected: expected.to_string(),
        actual,
    }
}

/// Runs the named suite. `None` for an unknown suite name.
///
/// Panics past the expansion caps; degrees up to 9 are always safe (the
/// CLI enforces that bound).
pub fn run_suite(name: &str, degree: u32) -> Option<Vec<CheckRecord>> {
    match name {
        "fundamental-lemma" => Some(fundamental_lemma_suite(degree)),
        "product" => Some(product_suite(degree)),
        "coproduct" => Some(coproduct_suite(degree)),
        "involutions" => Some(involution_suite(degree)),
        "matrices" => Some(matrix_suite(degree)),
        "refinement" => Some(refinement_suite(degree)),
        "all" => {
            let mut out = fundamental_lemma_suite(degree);
            out.extend(product_suite(degree));
            out.extend(coproduct_suite(degree));
            out.extend(involution_suite(degree));
            out.extend(matrix_suite(degree));
            out.extend(refinement_suite(degree));
            Some(out)
        }
        _ => None,
    }
}

pub fn suite_names() -> &'static [&'static str] {
    &[
        "fundamental-lemma",
        "product",
        "coproduct",
        "involutions",
        "matrices",
        "refinement",
        "all",
    ]
}

// ---- poset families ----

/// Every strict partial order on `0..n`, as lists of related pairs.
pub fn all_strict_orders(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    'masks: for mask in 0u32..(1 << pairs.len()) {
        let mut less = vec![false; n * n];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                less[i * n + j] = true;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if less[i * n + j] && less[j * n + i] {
                    continue 'masks;
                }
                for k in 0..n {
                    if less[i * n + j] && less[j * n + k] && !less[i * n + k] {
                        continue 'masks;
                    }
                }
            }
        }
        out.push(
            pairs
                .iter()
                .enumerate()
                .filter(|&(bit, _)| mask & (1 << bit) != 0)
                .map(|(_, &p)| p)
                .collect(),
        );
    }
    out
}

/// A fixed list of five-element posets by cover relations on `0..5`.
pub fn five_element_posets() -> Vec<(&'static str, Vec<(usize, usize)>)> {
    vec![
        ("chain", vec![(0, 1), (1, 2), (2, 3), (3, 4)]),
        ("antichain", vec![]),
        ("v-plus-two", vec![(0, 1), (0, 2)]),
        ("wedge-plus-two", vec![(0, 2), (1, 2)]),
        ("diamond-plus-one", vec![(0, 1), (0, 2), (1, 3), (2, 3)]),
        ("n-plus-one", vec![(0, 2), (1, 2), (1, 3)]),
        ("fence", vec![(0, 1), (2, 1), (2, 3), (4, 3)]),
        ("three-chain-two-chain", vec![(0, 1), (1, 2), (3, 4)]),
        ("y-plus-one", vec![(0, 1), (1, 2), (1, 3)]),
        ("bipartite", vec![(0, 2), (0, 3), (1, 2), (1, 3)]),
    ]
}

/// Labelling schemes for the generated poset families. `EqualValues` makes
/// every label share value 1 (forcing index comparisons), `DistinctValues`
/// uses one value per element, and `AlternatingValues` mixes values 1 and 2
/// while keeping the total weight small enough for expansion-level checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LabelScheme {
    EqualValues,
    DistinctValues,
    AlternatingValues,
}

impl LabelScheme {
    pub fn tag(&self) -> &'static str {
        match self {
            LabelScheme::EqualValues => "equal-values",
            LabelScheme::DistinctValues => "distinct-values",
            LabelScheme::AlternatingValues => "alternating-values",
        }
    }
}

pub fn build_poset(
    n: usize,
    relations: &[(usize, usize)],
    scheme: LabelScheme,
    dualized: bool,
) -> WeightedLabelledPoset {
    let label = |e: usize| match scheme {
        LabelScheme::EqualValues => LabelledInteger::new(1, e as u32 + 1).unwrap(),
        LabelScheme::DistinctValues => LabelledInteger::new(e as u32 + 1, 1).unwrap(),
        LabelScheme::AlternatingValues => {
            LabelledInteger::new(1 + (e as u32 % 2), 1 + (e as u32 / 2)).unwrap()
        }
    };
    let labels: Vec<LabelledInteger> = (0..n).map(label).collect();
    let covers: Vec<(LabelledInteger, LabelledInteger)> = relations
        .iter()
        .map(|&(i, j)| (labels[i], labels[j]))
        .collect();
    WeightedLabelledPoset::naturally_weighted(&labels, &covers, dualized)
        .expect("generated relations form a poset")
}

// ---- suites ----

fn sorted_ppartitions(p: &WeightedLabelledPoset, n_vars: u32) -> Vec<PPartition> {
    let mut all = enumerate_ppartitions(p, n_vars);
    all.sort();
    all
}

/// Checks that the P-partitions of a poset split exactly across its linear
/// extensions, as multisets of assignments, for every `N <= max_vars`.
fn fundamental_lemma_holds(p: &WeightedLabelledPoset, max_vars: u32) -> Result<(), String> {
    for n_vars in 1..=max_vars {
        let whole = sorted_ppartitions(p, n_vars);
        let mut split: Vec<PPartition> = Vec::new();
        for ext in p.linear_extensions().map_err(|e| e.to_string())? {
            let chain_poset = p.extension_poset(&ext).map_err(|e| e.to_string())?;
            split.extend(enumerate_ppartitions(&chain_poset, n_vars));
        }
        split.sort();
        if whole != split {
            return Err(format!(
                "N={n_vars}: {} partitions vs {} across extensions",
                whole.len(),
                split.len()
            ));
        }
    }
    Ok(())
}

/// Fundamental lemma over the exhaustive family of posets on up to
/// `min(bound, 4)` elements, plus the fixed five-element list when `bound`
/// is at least 5, with `N <= 3` and four labelling variants each.
pub fn fundamental_lemma_suite(bound: u32) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    let variants = [
        (LabelScheme::EqualValues, false),
        (LabelScheme::EqualValues, true),
        (LabelScheme::DistinctValues, false),
        (LabelScheme::DistinctValues, true),
    ];
    for size in 0..=(bound.min(4) as usize) {
        let orders = all_strict_orders(size);
        for &(scheme, dualized) in &variants {
            let mut failure = None;
            for (index, relations) in orders.iter().enumerate() {
                let p = build_poset(size, relations, scheme, dualized);
                if let Err(detail) = fundamental_lemma_holds(&p, 3) {
                    failure = Some(format!("poset #{index}: {detail}"));
                    break;
                }
            }
            let name = format!(
                "fundamental-lemma size={size} labels={} dualized={dualized} ({} posets)",
                scheme.tag(),
                orders.len()
            );
            out.push(CheckRecord {
                name,
                expected: "all split across extensions".to_string(),
                actual: failure.unwrap_or_else(|| "all split across extensions".to_string()),
            });
        }
    }
    if bound >= 5 {
        for (label, covers) in five_element_posets() {
            for &(scheme, dualized) in &variants {
                let p = build_poset(5, &covers, scheme, dualized);
                let name = format!(
                    "fundamental-lemma five-element {label} labels={} dualized={dualized}",
                    scheme.tag()
                );
                out.push(CheckRecord {
                    name,
                    expected: "splits across extensions".to_string(),
                    actual: match fundamental_lemma_holds(&p, 3) {
                        Ok(()) => "splits across extensions".to_string(),
                        Err(detail) => detail,
                    },
                });
            }
        }
    }
    out
}

fn power_sum_cache(max_degree: u32) -> BTreeMap<Composition, QSymElement> {
    let mut cache = BTreeMap::new();
    for n in 0..=max_degree {
        for alpha in Composition::all_of(n) {
            let p = power_sum(&alpha).expect("degree within cap");
            cache.insert(alpha, p);
        }
    }
    cache
}

/// Shuffle product rule against the truncation-oracle product, for every
/// pair with total degree at most `max_degree`.
pub fn product_suite(max_degree: u32) -> Vec<CheckRecord> {
    let cache = power_sum_cache(max_degree);
    let mut out = Vec::new();
    for m in 0..=max_degree {
        for alpha in Composition::all_of(m) {
            for n in 0..=(max_degree - m) {
                for beta in Composition::all_of(n) {
                    let rule = multiply_power_sums(&alpha, &beta)
                        .expect("degree within cap")
                        .to_m();
                    let oracle =
                        multiply(&cache[&alpha], &cache[&beta]).expect("degree within cap");
                    out.push(eq_check(
                        format!("product p[{alpha}]*p[{beta}]"),
                        &rule,
                        &oracle,
                    ));
                }
            }
        }
    }
    out
}

/// Deconcatenation coproduct rule against the deconcatenation of the
/// monomial expansion, plus the two-alphabet oracle on chains with at most
/// four elements and the lower-set oracle on the five-element poset family.
pub fn coproduct_suite(max_degree: u32) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 0..=max_degree {
        for alpha in Composition::all_of(n) {
            let rule = coproduct_power_sum(&alpha).to_m();
            let direct = coproduct_m(&power_sum(&alpha).expect("degree within cap"));
            out.push(eq_check(format!("coproduct p[{alpha}]"), &rule, &direct));
        }
    }
    // deconcatenation validated against the doubled-alphabet evaluation
    for n in 0..=max_degree.min(6) {
        for alpha in Composition::all_of(n) {
            if alpha.len() > 4 {
                continue;
            }
            for chain in power_sum_chains(&alpha).expect("degree within cap") {
                for dualized in [false, true] {
                    let poset = if dualized {
                        WeightedLabelledPoset::chain(&chain).dual_labelling()
                    } else {
                        WeightedLabelledPoset::chain(&chain)
                    };
                    let lhs = tensor_truncated(&coproduct_m(&chain_to_m(&chain, dualized)), n);
                    let rhs = two_alphabet_truncation(&poset, n);
                    out.push(eq_check(
                        format!("two-alphabet chain {chain} dualized={dualized}"),
                        &lhs,
                        &rhs,
                    ));
                }
            }
        }
    }
    // lower-set oracle on the fixed five-element family
    for (label, covers) in five_element_posets() {
        for scheme in [LabelScheme::EqualValues, LabelScheme::AlternatingValues] {
            let p = build_poset(5, &covers, scheme, false);
            let via_lower_sets = coproduct_oracle(&p).expect("family posets are small");
            let via_deconcat = coproduct_m(&poset_to_m(&p).expect("family posets are small"));
            out.push(eq_check(
                format!("lower-set coproduct {label} labels={}", scheme.tag()),
                &via_lower_sets,
                &via_deconcat,
            ));
        }
    }
    out
}

/// The involution identities on both power sum bases, their involutivity,
/// the commuting diagram, and the chain- and poset-level identities they
/// are deduced from.
pub fn involution_suite(max_degree: u32) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 0..=max_degree {
        for alpha in Composition::all_of(n) {
            let p = power_sum(&alpha).expect("degree within cap");
            let pr = reverse_power_sum(&alpha).expect("degree within cap");
            let reversed = alpha.reverse();
            let p_rev = power_sum(&reversed).expect("degree within cap");
            let pr_rev = reverse_power_sum(&reversed).expect("degree within cap");
            let sign = if (n as i64 - alpha.len() as i64) % 2 == 0 {
                coeff::int(1)
            } else {
                coeff::int(-1)
            };
            out.push(eq_check(
                format!("psi(p[{alpha}])"),
                &psi(&p),
                &pr.scaled(&sign),
            ));
            out.push(eq_check(format!("rho(p[{alpha}])"), &rho(&p), &pr_rev));
            out.push(eq_check(
                format!("omega(p[{alpha}])"),
                &omega(&p),
                &p_rev.scaled(&sign),
            ));
            out.push(eq_check(
                format!("psi(pr[{alpha}])"),
                &psi(&pr),
                &p.scaled(&sign),
            ));
            out.push(eq_check(format!("rho(pr[{alpha}])"), &rho(&pr), &p_rev));
            out.push(eq_check(
                format!("omega(pr[{alpha}])"),
                &omega(&pr),
                &pr_rev.scaled(&sign),
            ));
            for (tag, element) in [("p", &p), ("pr", &pr)] {
                out.push(eq_check(
                    format!("psi^2({tag}[{alpha}])"),
                    &psi(&psi(element)),
                    &element.to_m(),
                ));
                out.push(eq_check(
                    format!("rho^2({tag}[{alpha}])"),
                    &rho(&rho(element)),
                    &element.to_m(),
                ));
                out.push(eq_check(
                    format!("omega^2({tag}[{alpha}])"),
                    &omega(&omega(element)),
                    &element.to_m(),
                ));
                out.push(eq_check(
                    format!("omega=rho.psi({tag}[{alpha}])"),
                    &omega(element),
                    &rho(&psi(element)),
                ));
                out.push(eq_check(
                    format!("omega=psi.rho({tag}[{alpha}])"),
                    &omega(element),
                    &psi(&rho(element)),
                ));
            }
        }
    }
    // chain-level identities: psi/rho/omega permute chain expansions
    for n in 0..=max_degree.min(6) {
        for alpha in Composition::all_of(n) {
            let mut all_hold = true;
            let mut detail = String::new();
            for chain in power_sum_chains(&alpha).expect("degree within cap") {
                let weight = chain.total_weight() as i64;
                let sign = if (weight - chain.len() as i64) % 2 == 0 {
                    coeff::int(1)
                } else {
                    coeff::int(-1)
                };
                let k = chain_to_m(&chain, false);
                let checks = [
                    ("psi", psi(&k), chain_to_m(&chain, true).scaled(&sign)),
                    ("rho", rho(&k), chain_to_m(&chain.reversed(), true)),
                    (
                        "omega",
                        omega(&k),
                        chain_to_m(&chain.reversed(), false).scaled(&sign),
                    ),
                ];
                for (tag, lhs, rhs) in checks {
                    if lhs != rhs {
                        all_hold = false;
                        detail = format!("{tag} fails on chain {chain}");
                    }
                }
            }
            out.push(CheckRecord {
                name: format!("chain involutions alpha={alpha}"),
                expected: "all identities hold".to_string(),
                actual: if all_hold {
                    "all identities hold".to_string()
                } else {
                    detail
                },
            });
        }
    }
    // poset-level identities on the fixed five-element family
    for (label, covers) in five_element_posets() {
        for scheme in [LabelScheme::EqualValues, LabelScheme::AlternatingValues] {
            let p = build_poset(5, &covers, scheme, false);
            let k = poset_to_m(&p).expect("family posets are small");
            let weight = p.total_weight() as i64;
            let sign = if (weight - p.len() as i64) % 2 == 0 {
                coeff::int(1)
            } else {
                coeff::int(-1)
            };
            let star = p.dual();
            out.push(eq_check(
                format!("poset psi {label} labels={}", scheme.tag()),
                &psi(&k),
                &poset_to_m(&p.dual_labelling())
                    .expect("family posets are small")
                    .scaled(&sign),
            ));
            out.push(eq_check(
                format!("poset rho {label} labels={}", scheme.tag()),
                &rho(&k),
                &poset_to_m(&star.dual_labelling()).expect("family posets are small"),
            ));
            out.push(eq_check(
                format!("poset omega {label} labels={}", scheme.tag()),
                &omega(&k),
                &poset_to_m(&star)
                    .expect("family posets are small")
                    .scaled(&sign),
            ));
        }
    }
    out
}

/// Matrix counting rules: `R`-counts against monomial coefficients of the
/// power sums, symmetric counts against the symmetric power sums, and the
/// `Q`-formula against the fundamental expansion.
pub fn matrix_suite(max_degree: u32) -> Vec<CheckRecord> {
    let bound = max_degree.min(6);
    let mut out = Vec::new();
    for n in 0..=bound {
        let compositions = Composition::all_of(n);
        for alpha in &compositions {
            let p = power_sum(alpha).expect("degree within cap");
            let mut failure = None;
            for beta in &compositions {
                let count = count_r(alpha, beta).expect("sizes are equal");
                let coeff_beta = p.coeff(beta);
                if coeff::int(count as i64) != coeff_beta {
                    failure = Some(format!(
                        "beta={beta}: count {count} vs coefficient {}",
                        coeff::render(&coeff_beta)
                    ));
                    break;
                }
            }
            out.push(CheckRecord {
                name: format!("R-counts p[{alpha}]"),
                expected: "counts match coefficients".to_string(),
                actual: failure.unwrap_or_else(|| "counts match coefficients".to_string()),
            });
        }
        let partitions = Partition::all_of(n);
        for lambda in &partitions {
            let e = symmetric_power_sum(lambda).expect("degree within cap");
            let mut failure = None;
            for mu in &partitions {
                let count = count_r_symmetric(lambda, mu).expect("sizes are equal");
                let coeff_mu = e.coeff(mu.as_composition());
                if coeff::int(count as i64) != coeff_mu {
                    failure = Some(format!(
                        "mu={mu}: count {count} vs coefficient {}",
                        coeff::render(&coeff_mu)
                    ));
                    break;
                }
            }
            out.push(CheckRecord {
                name: format!("symmetric R-counts p[{lambda}]"),
                expected: "counts match coefficients".to_string(),
                actual: failure.unwrap_or_else(|| "counts match coefficients".to_string()),
            });
        }
        for alpha in &compositions {
            let via_q = power_sum_to_f(alpha).expect("degree within cap");
            let via_m = m_to_f(&power_sum(alpha).expect("degree within cap"));
            out.push(eq_check(format!("Q-expansion p[{alpha}]"), &via_q, &via_m));
        }
    }
    out
}

/// Refinement of the symmetric power sums: the rearrangement sum is
/// symmetric and equals the weight antichain's generating function.
pub fn refinement_suite(max_degree: u32) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 0..=max_degree.min(6) {
        for lambda in Partition::all_of(n) {
            let e = symmetric_power_sum(&lambda).expect("degree within cap");
            // symmetric: coefficients constant on rearrangement classes
            let mut failure = None;
            let mut seen_classes: BTreeMap<Partition, Coeff> = BTreeMap::new();
            for (beta, c) in e.terms() {
                let class = beta.underlying_partition();
                let entry = seen_classes
                    .entry(class.clone())
                    .or_insert_with(|| c.clone());
                if entry != c {
                    failure = Some(format!("class {class} has unequal coefficients"));
                }
            }
            for (class, c) in &seen_classes {
                for beta in class.rearrangements() {
                    if &e.coeff(&beta) != c {
                        failure = Some(format!("rearrangement {beta} misses class {class}"));
                    }
                }
            }
            out.push(CheckRecord {
                name: format!("symmetry of refined p[{lambda}]"),
                expected: "constant on rearrangement classes".to_string(),
                actual: failure.unwrap_or_else(|| "constant on rearrangement classes".to_string()),
            });
            // equals the antichain generating function, read off its truncation
            let antichain = WeightedLabelledPoset::antichain(&lambda);
            let truncation = k_truncated(&antichain, n);
            let from_oracle =
                qsym_from_truncation(&truncation, n).expect("antichain truncation is faithful");
            out.push(eq_check(
                format!("antichain expansion p[{lambda}]"),
                &from_oracle,
                &e,
            ));
        }
    }
    out
}

/// Positivity and triangularity of the power sum monomial expansions.
pub fn positivity_suite(max_degree: u32) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for n in 0..=max_degree {
        let full = if n == 0 {
            Composition::empty()
        } else {
            Composition::new(vec![n]).expect("n >= 1")
        };
        for alpha in Composition::all_of(n) {
            let p = power_sum(&alpha).expect("degree within cap");
            let pr = reverse_power_sum(&alpha).expect("degree within cap");
            let mut failure = None;
            for (beta, c) in p.terms() {
                if !coeff::is_nonnegative_integer(c) {
                    failure = Some(format!("coefficient of M[{beta}] is {}", coeff::render(c)));
                } else if !beta.coarsens(&alpha) {
                    failure = Some(format!("support at M[{beta}] does not coarsen"));
                }
            }
            if p.coeff(&alpha) <= coeff::int(0) {
                failure = Some("leading coefficient is not positive".to_string());
            }
            let is_partition = alpha.underlying_partition().as_composition() == &alpha;
            let expected_full = if is_partition { 1 } else { 0 };
            if p.coeff(&full) != coeff::int(expected_full) {
                failure = Some(format!(
                    "coefficient of M[{full}] is {}, expected {expected_full}",
                    coeff::render(&p.coeff(&full))
                ));
            }
            let reverse_is_partition =
                alpha.underlying_partition().as_composition() == &alpha.reverse();
            let expected_full_r = if reverse_is_partition { 1 } else { 0 };
            if pr.coeff(&full) != coeff::int(expected_full_r) {
                failure = Some(format!(
                    "reverse coefficient of M[{full}] is {}, expected {expected_full_r}",
                    coeff::render(&pr.coeff(&full))
                ));
            }
            out.push(CheckRecord {
                name: format!("positivity p[{alpha}]"),
                expected: "nonnegative integral triangular".to_string(),
                actual: failure.unwrap_or_else(|| "nonnegative integral triangular".to_string()),
            });
        }
    }
    out
}

// ---- built-in worked examples ----

fn render_matrix_list(matrices: &[crate::matrices::FillingMatrix]) -> String {
    if matrices.is_empty() {
        return "(none)".to_string();
    }
    matrices
        .iter()
        .map(|m| m.render_plain().replace('\n', " / "))
        .collect::<Vec<_>>()
        .join("; ")
}

/// The fixed worked examples replayed by the `paper-examples` subcommand:
/// classic expansions with frozen expected values, checked exactly.
pub fn worked_examples() -> Vec<CheckRecord> {
    let mut out = Vec::new();

    // a two-element antichain splits across its two extensions; labels are
    // compared in the natural order so the ascending extension is the weak one
    let p_label = LabelledInteger::new(1, 1).unwrap();
    let q_label = LabelledInteger::new(2, 1).unwrap();
    let antichain2 =
        WeightedLabelledPoset::naturally_weighted(&[p_label, q_label], &[], true).unwrap();
    out.push(value_check(
        "two-element antichain splits across extensions (N=3)",
        "9 partitions = 6 + 3 across 2 extensions",
        {
            let whole = sorted_ppartitions(&antichain2, 3);
            let extensions = antichain2.linear_extensions().unwrap();
            let counts: Vec<usize> = extensions
                .iter()
                .map(|ext| {
                    enumerate_ppartitions(&antichain2.extension_poset(ext).unwrap(), 3).len()
                })
                .collect();
            let mut split: Vec<PPartition> = Vec::new();
            for ext in &extensions {
                split.extend(enumerate_ppartitions(
                    &antichain2.extension_poset(ext).unwrap(),
                    3,
                ));
            }
            split.sort();
            if whole == split {
                format!(
                    "{} partitions = {} across {} extensions",
                    whole.len(),
                    counts
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" + "),
                    extensions.len()
                )
            } else {
                "multisets differ".to_string()
            }
        },
    ));

    // p[2,1,1] refines into monomial symmetric functions
    let lambda211 = Partition::new(vec![2, 1, 1]).unwrap();
    let refined = symmetric_power_sum(&lambda211).unwrap();
    out.push(value_check(
        "p[2,1,1] monomial expansion",
        "2*M[1,1,2] + 2*M[1,2,1] + 2*M[1,3] + 2*M[2,1,1] + 2*M[2,2] + 2*M[3,1] + 1*M[4]",
        refined.render_plain(),
    ));
    let as_monomial_symmetric = monomial_symmetric(&lambda211)
        .scaled(&coeff::int(2))
        .plus(&monomial_symmetric(&Partition::new(vec![3, 1]).unwrap()).scaled(&coeff::int(2)))
        .plus(&monomial_symmetric(&Partition::new(vec![2, 2]).unwrap()).scaled(&coeff::int(2)))
        .plus(&monomial_symmetric(&Partition::new(vec![4]).unwrap()));
    out.push(eq_check(
        "p[2,1,1] = 2m[2,1,1] + 2m[3,1] + 2m[2,2] + m[4]".to_string(),
        &refined,
        &as_monomial_symmetric,
    ));
    for (mu, expected) in [("2,1,1", 2u64), ("3,1", 2), ("2,2", 2), ("4", 1)] {
        let mu_partition: Partition = mu.parse().unwrap();
        out.push(value_check(
            &format!("symmetric filling count (2,1,1)->({mu})"),
            &expected.to_string(),
            count_r_symmetric(&lambda211, &mu_partition)
                .unwrap()
                .to_string(),
        ));
    }

    // p[1,1,2] and its two chain summands
    let alpha112: Composition = "1,1,2".parse().unwrap();
    out.push(value_check(
        "p[1,1,2] monomial expansion",
        "2*M[1,1,2] + 1*M[2,2]",
        power_sum(&alpha112).unwrap().render_plain(),
    ));
    let chains = power_sum_chains(&alpha112).unwrap();
    out.push(value_check(
        "chains of p[1,1,2]",
        "1_1 1_2 2_1; 1_2 1_1 2_1",
        chains
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("; "),
    ));
    out.push(value_check(
        "expansion of chain 1_1 1_2 2_1",
        "1*M[1,1,2]",
        chain_to_m(&"1_1 1_2 2_1".parse().unwrap(), false).render_plain(),
    ));
    out.push(value_check(
        "expansion of chain 1_2 1_1 2_1",
        "1*M[1,1,2] + 1*M[2,2]",
        chain_to_m(&"1_2 1_1 2_1".parse().unwrap(), false).render_plain(),
    ));

    // relabelled chains with the same relative index order agree
    out.push(eq_check(
        "relabelling invariance: 1_2 1_1 2_1 vs 1_3 1_1 2_3".to_string(),
        &chain_to_m(&"1_2 1_1 2_1".parse().unwrap(), false),
        &chain_to_m(&"1_3 1_1 2_3".parse().unwrap(), false),
    ));

    // p[1,2,1] in both bases with its filling matrices
    let alpha121: Composition = "1,2,1".parse().unwrap();
    out.push(value_check(
        "p[1,2,1] monomial expansion",
        "2*M[1,2,1] + 2*M[1,3]",
        power_sum(&alpha121).unwrap().render_plain(),
    ));
    out.push(value_check(
        "fillings (1,2,1)->(1,2,1)",
        ". 1 . / 2 . . / . . 1; . . 1 / 2 . . / . 1 .",
        render_matrix_list(&enumerate_r(&alpha121, &"1,2,1".parse().unwrap()).unwrap()),
    ));
    out.push(value_check(
        "fillings (1,2,1)->(1,3)",
        ". 1 . / 2 . 1; . . 1 / 2 1 .",
        render_matrix_list(&enumerate_r(&alpha121, &"1,3".parse().unwrap()).unwrap()),
    ));
    out.push(value_check(
        "p[1,2,1] fundamental expansion",
        "-2*F[1,1,2] + 2*F[1,3]",
        power_sum_to_f(&alpha121).unwrap().render_plain(),
    ));
    out.push(value_check(
        "overlap fillings (1,2,1)->(1,3)",
        ". 1 . / 2 . 1; . . 1 / 2 1 .",
        render_matrix_list(&enumerate_q(&alpha121, &"1,3".parse().unwrap()).unwrap()),
    ));
    out.push(value_check(
        "overlap fillings (1,2,1)->(1,2,1)",
        "(none)",
        render_matrix_list(&enumerate_q(&alpha121, &"1,2,1".parse().unwrap()).unwrap()),
    ));
    let q121 = count_q(&alpha121, &"1,3".parse().unwrap()).unwrap();
    out.push(value_check(
        "overlap count (1,2,1)->(1,3)",
        "2",
        q121.to_string(),
    ));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strict_order_counts() {
        assert_eq!(all_strict_orders(0).len(), 1);
        assert_eq!(all_strict_orders(1).len(), 1);
        assert_eq!(all_strict_orders(2).len(), 3);
        assert_eq!(all_strict_orders(3).len(), 19);
        assert_eq!(all_strict_orders(4).len(), 219);
    }

    #[test]
    fn suites_pass_at_small_degree() {
        for name in [
            "product",
            "coproduct",
            "involutions",
            "matrices",
            "refinement",
        ] {
            let records = run_suite(name, 3).unwrap();
            assert!(!records.is_empty());
            for r in &records {
                assert!(
                    r.passed(),
                    "{name}: {} expected {} got {}",
                    r.name,
                    r.expected,
                    r.actual
                );
            }
        }
        let records = run_suite("fundamental-lemma", 3).unwrap();
        for r in &records {
            assert!(r.passed(), "{}: {}", r.name, r.actual);
        }
        assert!(run_suite("unknown", 3).is_none());
    }

    #[test]
    fn positivity_suite_passes() {
        for r in positivity_suite(4) {
            assert!(r.passed(), "{}: {}", r.name, r.actual);
        }
    }

    #[test]
    fn worked_examples_pass() {
        for r in worked_examples() {
            assert!(
                r.passed(),
                "{}: expected `{}`, got `{}`",
                r.name,
                r.expected,
                r.actual
            );
        }
    }
}
