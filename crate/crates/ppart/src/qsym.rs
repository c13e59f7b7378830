//! Quasisymmetric functions over exact rationals: the monomial and
//! fundamental bases, expansions of weighted labelled chains, and the
//! combinatorial power sum bases built from chain expansions over linear
//! extensions of weight antichains.
//!
//! Elements are sparse maps from compositions to coefficients, tagged with
//! the basis they are written in. The monomial basis is the internal normal
//! form: equality always compares monomial expansions, and `P`/`Pr`-tagged
//! elements stay formal until normalized.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::coeff::{self, Coeff};
use crate::composition::{Composition, Partition};
use crate::matrices;
use crate::poset::{
    weighted_descent_composition, LabelledChain, LabelledInteger, PosetError, WeightedLabelledPoset,
};

/// Basis-wide operations iterate over all `2^(n-1)` compositions of `n`;
/// they reject degrees over this cap by default. Use the `_capped` variants
/// to override.
pub const DEFAULT_DEGREE_CAP: u32 = 14;

/// Power sum expansion enumerates one chain per index assignment; the count
/// is the product of part-multiplicity factorials and is rejected above
/// this bound.
pub const MAX_EXTENSIONS: u128 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QsymError {
    #[error("degree {degree} is over the cap of {cap}")]
    DegreeCap { degree: u32, cap: u32 },
    #[error("expansion needs {count} chains, over the cap of {cap}")]
    ExtensionCap { count: u128, cap: u128 },
}

/// Basis tag carried by a [`QSymElement`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Basis {
    /// Monomial quasisymmetric functions.
    M,
    /// Fundamental quasisymmetric functions.
    F,
    /// Combinatorial power sums.
    P,
    /// Reverse combinatorial power sums.
    Pr,
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::P => "P",
            Basis::Pr => "Pr",
        }
    }

    pub fn parse(s: &str) -> Option<Basis> {
        match s.to_ascii_lowercase().as_str() {
            "m" => Some(Basis::M),
            "f" => Some(Basis::F),
            "p" => Some(Basis::P),
            "pr" => Some(Basis::Pr),
            _ => None,
        }
    }

    fn latex_symbol(&self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::P => "p",
            Basis::Pr => "p^r",
        }
    }
}

/// A basis-tagged sparse map from compositions to exact rationals. Zero
/// coefficients are never stored.
#[derive(Clone)]
pub struct QSymElement {
    basis: Basis,
    terms: BTreeMap<Composition, Coeff>,
}

impl QSymElement {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit: coefficient 1 on the empty composition.
    pub fn one(basis: Basis) -> Self {
        Self::from_term(basis, Composition::empty(), coeff::int(1))
    }

    pub fn from_term(basis: Basis, comp: Composition, c: Coeff) -> Self {
        let mut e = Self::zero(basis);
        e.add_assign_term(comp, c);
        e
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, Coeff)>,
    {
        let mut e = Self::zero(basis);
        for (comp, c) in terms {
            e.add_assign_term(comp, c);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, comp: &Composition) -> Coeff {
        self.terms.get(comp).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_assign_term(&mut self, comp: Composition, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(comp) {
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    /// Sum of two elements written in the same basis.
    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "cannot add across bases");
        let mut out = self.clone();
        for (comp, c) in &other.terms {
            out.add_assign_term(comp.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, factor: &Coeff) -> Self {
        if factor.is_zero() {
            return Self::zero(self.basis);
        }
        Self {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * factor))
                .collect(),
        }
    }

    pub fn negated(&self) -> Self {
        self.scaled(&coeff::int(-1))
    }

    /// Largest term size, 0 for the zero element.
    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|c| c.size()).max().unwrap_or(0)
    }

    /// `Some(n)` when every term has size `n` (the zero element reports 0).
    pub fn is_homogeneous(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|c| c.size());
        let first = match degrees.next() {
            None => return Some(0),
            Some(d) => d,
        };
        if degrees.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Splits into homogeneous components keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, QSymElement> {
        let mut parts: BTreeMap<u32, QSymElement> = BTreeMap::new();
        for (comp, c) in &self.terms {
            parts
                .entry(comp.size())
                .or_insert_with(|| QSymElement::zero(self.basis))
                .add_assign_term(comp.clone(), c.clone());
        }
        parts
    }

    /// Normalizes to the monomial basis. `P`/`Pr` terms expand through their
    /// chain sums; the caller is trusted to have built them within the caps.
    pub fn to_m(&self) -> QSymElement {
        match self.basis {
            Basis::M => self.clone(),
            _ => {
                let mut out = QSymElement::zero(Basis::M);
                for (comp, c) in &self.terms {
                    let expanded = basis_term_to_m(self.basis, comp);
                    for (beta, coeff_beta) in &expanded.terms {
                        out.add_assign_term(beta.clone(), coeff_beta * c);
                    }
                }
                out
            }
        }
    }

    /// Normalizes to the fundamental basis.
    pub fn to_f(&self) -> QSymElement {
        match self.basis {
            Basis::F => self.clone(),
            _ => m_to_f(&self.to_m()),
        }
    }

    /// Plain text, e.g. `2*M[1,1,2] + 1*M[2,2]`; empty compositions render
    /// as `e`, the zero element as `0`.
    pub fn render_plain(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (comp, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                out.push_str(&format!(
                    "{}*{}[{}]",
                    coeff::render(c),
                    self.basis.tag(),
                    comp
                ));
            } else if c.is_negative() {
                out.push_str(&format!(
                    " - {}*{}[{}]",
                    coeff::render(&-c.clone()),
                    self.basis.tag(),
                    comp
                ));
            } else {
                out.push_str(&format!(
                    " + {}*{}[{}]",
                    coeff::render(c),
                    self.basis.tag(),
                    comp
                ));
            }
        }
        out
    }

    /// LaTeX with subscript notation, e.g. `2M_{112} + M_{22}`. Parts are
    /// concatenated when all are single digits, comma-separated otherwise.
    pub fn render_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let subscript = |comp: &Composition| -> String {
            if comp.is_empty() {
                return r"\emptyset".to_string();
            }
            let parts = comp.parts();
            if parts.iter().all(|&p| p <= 9) {
                parts.iter().map(|p| p.to_string()).collect()
            } else {
                parts
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            }
        };
        let render_coeff = |c: &Coeff| -> String {
            if c.is_integer() {
                c.numer().to_string()
            } else {
                let sign = if c.is_negative() { "-" } else { "" };
                format!(r"{sign}\tfrac{{{}}}{{{}}}", c.numer().abs(), c.denom())
            }
        };
        let mut out = String::new();
        for (i, (comp, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            let body = if magnitude.is_one() {
                format!("{}_{{{}}}", self.basis.latex_symbol(), subscript(comp))
            } else {
                format!(
                    "{}{}_{{{}}}",
                    render_coeff(&magnitude),
                    self.basis.latex_symbol(),
                    subscript(comp)
                )
            };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        out
    }

    /// The JSON contract:
    /// `{"basis":"M","terms":[{"composition":[1,2,1],"coeff":{"num":2,"den":1}},...]}`
    /// with terms in canonical composition order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(comp, c)| {
                serde_json::json!({
                    "composition": comp.parts(),
                    "coeff": coeff::to_json(c),
                })
            })
            .collect();
        serde_json::json!({ "basis": self.basis.tag(), "terms": terms })
    }
}

// Equality is decided after conversion of both operands to the monomial
// basis, so a formal P-tagged element equals its own expansion.
impl PartialEq for QSymElement {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            return self.terms == other.terms;
        }
        self.to_m().terms == other.to_m().terms
    }
}

impl Eq for QSymElement {}

impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_plain())
    }
}

impl fmt::Debug for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_plain())
    }
}

/// Single basis element expanded into the monomial basis.
fn basis_term_to_m(basis: Basis, comp: &Composition) -> QSymElement {
    match basis {
        Basis::M => QSymElement::from_term(Basis::M, comp.clone(), coeff::int(1)),
        Basis::F => {
            // F_a = sum of M_b over refinements b of a
            let mut out = QSymElement::zero(Basis::M);
            for beta in interval(
                &comp.descent_set(),
                &all_positions(comp.size()),
                comp.size(),
            ) {
                out.add_assign_term(beta, coeff::int(1));
            }
            out
        }
        Basis::P => power_sum_core(comp, false),
        Basis::Pr => power_sum_core(comp, true),
    }
}

fn all_positions(n: u32) -> std::collections::BTreeSet<u32> {
    (1..n).collect()
}

/// Compositions whose descent sets lie between `low` and `high` (inclusive),
/// for compositions of `n`. Requires `low` to be a subset of `high`.
fn interval(
    low: &std::collections::BTreeSet<u32>,
    high: &std::collections::BTreeSet<u32>,
    n: u32,
) -> Vec<Composition> {
    debug_assert!(low.is_subset(high));
    let free: Vec<u32> = high.difference(low).copied().collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0u32..(1 << free.len()) {
        let mut set = low.clone();
        for (bit, &pos) in free.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                set.insert(pos);
            }
        }
        out.push(Composition::from_descents(set, n).expect("descents are in range"));
    }
    out
}

/// Monomial expansion of the generating function of a weighted labelled
/// chain: the sum of `M_b` over the refinement interval between the weight
/// composition and the descent composition, all coefficients 1.
pub fn chain_to_m(s: &LabelledChain, dualized: bool) -> QSymElement {
    let weights: Vec<u32> = s.entries().iter().map(|e| e.value()).collect();
    weighted_chain_to_m(s.entries(), &weights, dualized)
}

/// As [`chain_to_m`] with explicit weights (used when a chain inherits
/// weights from a larger poset).
pub fn weighted_chain_to_m(
    labels: &[LabelledInteger],
    weights: &[u32],
    dualized: bool,
) -> QSymElement {
    let n: u32 = weights.iter().sum();
    let alpha_set: std::collections::BTreeSet<u32> = {
        let mut set = std::collections::BTreeSet::new();
        let mut partial = 0;
        for &w in weights.iter().take(weights.len().saturating_sub(1)) {
            partial += w;
            set.insert(partial);
        }
        set
    };
    let delta = weighted_descent_composition(labels, weights, dualized);
    let mut out = QSymElement::zero(Basis::M);
    for beta in interval(&delta.descent_set(), &alpha_set, n) {
        out.add_assign_term(beta, coeff::int(1));
    }
    out
}

/// Fundamental expansion of a chain generating function, by
/// inclusion-exclusion between the descent compositions under the two label
/// orders.
pub fn chain_to_f(s: &LabelledChain, dualized: bool) -> QSymElement {
    let n = s.total_weight();
    let delta_active = s.delta(dualized);
    let delta_other = s.delta(!dualized);
    let low = delta_active.descent_set();
    let high: std::collections::BTreeSet<u32> = (1..n)
        .filter(|pos| !delta_other.descent_set().contains(pos))
        .collect();
    let base_len = delta_active.len() as i64;
    let mut out = QSymElement::zero(Basis::F);
    for beta in interval(&low, &high, n) {
        let sign = if (beta.len() as i64 - base_len) % 2 == 0 {
            coeff::int(1)
        } else {
            coeff::int(-1)
        };
        out.add_assign_term(beta, sign);
    }
    out
}

/// `M_a = sum over refinements b of a of (-1)^(l(b)-l(a)) F_b`, extended
/// linearly. The input must be in the monomial basis.
pub fn m_to_f(e: &QSymElement) -> QSymElement {
    assert_eq!(
        e.basis(),
        Basis::M,
        "m_to_f expects a monomial-basis element"
    );
    let mut out = QSymElement::zero(Basis::F);
    for (alpha, c) in e.terms() {
        let n = alpha.size();
        for beta in interval(&alpha.descent_set(), &all_positions(n), n) {
            let sign = if (beta.len() - alpha.len()).is_multiple_of(2) {
                c.clone()
            } else {
                -c.clone()
            };
            out.add_assign_term(beta, sign);
        }
    }
    out
}

/// `F_a = sum over refinements b of a of M_b`, extended linearly. The input
/// must be in the fundamental basis.
pub fn f_to_m(e: &QSymElement) -> QSymElement {
    assert_eq!(
        e.basis(),
        Basis::F,
        "f_to_m expects a fundamental-basis element"
    );
    let mut out = QSymElement::zero(Basis::M);
    for (alpha, c) in e.terms() {
        let n = alpha.size();
        for beta in interval(&alpha.descent_set(), &all_positions(n), n) {
            out.add_assign_term(beta, c.clone());
        }
    }
    out
}

/// Number of linear extensions of the weight antichain with a given weight
/// word: the product of part-multiplicity factorials.
fn extension_count(alpha: &Composition) -> u128 {
    let mut count: u128 = 1;
    for (_, r) in alpha.multiplicities() {
        for k in 1..=u128::from(r) {
            count = count.saturating_mul(k);
        }
    }
    count
}

fn ensure_expandable(alpha: &Composition, cap: u32) -> Result<(), QsymError> {
    if alpha.size() > cap {
        return Err(QsymError::DegreeCap {
            degree: alpha.size(),
            cap,
        });
    }
    let count = extension_count(alpha);
    if count > MAX_EXTENSIONS {
        return Err(QsymError::ExtensionCap {
            count,
            cap: MAX_EXTENSIONS,
        });
    }
    Ok(())
}

/// The linear extensions of the weight antichain whose weight word is
/// `alpha`, as labelled chains with canonical index sets, sorted in the
/// natural label order.
pub fn power_sum_chains(alpha: &Composition) -> Result<Vec<LabelledChain>, QsymError> {
    ensure_expandable(alpha, DEFAULT_DEGREE_CAP)?;
    Ok(power_sum_chains_core(alpha))
}

fn power_sum_chains_core(alpha: &Composition) -> Vec<LabelledChain> {
    // positions of each part value, in order of appearance
    let mut positions: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (pos, &value) in alpha.parts().iter().enumerate() {
        positions.entry(value).or_default().push(pos);
    }
    let values: Vec<u32> = positions.keys().copied().collect();
    let mut chains = Vec::new();
    let mut assignment: Vec<u32> = vec![0; alpha.len()];
    fn permutations(k: u32) -> Vec<Vec<u32>> {
        // all orderings of 1..=k, lexicographic
        fn go(remaining: &mut Vec<u32>, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if remaining.is_empty() {
                out.push(prefix.clone());
                return;
            }
            for i in 0..remaining.len() {
                let v = remaining.remove(i);
                prefix.push(v);
                go(remaining, prefix, out);
                prefix.pop();
                remaining.insert(i, v);
            }
        }
        let mut out = Vec::new();
        go(&mut (1..=k).collect(), &mut Vec::new(), &mut out);
        out
    }
    fn assign(
        values: &[u32],
        positions: &BTreeMap<u32, Vec<usize>>,
        alpha: &Composition,
        assignment: &mut Vec<u32>,
        chains: &mut Vec<LabelledChain>,
    ) {
        match values.split_first() {
            None => {
                let entries: Vec<LabelledInteger> = alpha
                    .parts()
                    .iter()
                    .zip(assignment.iter())
                    .map(|(&value, &index)| {
                        LabelledInteger::new(value, index).expect("indices start at 1")
                    })
                    .collect();
                chains.push(LabelledChain::new(entries).expect("labels are distinct"));
            }
            Some((&value, rest)) => {
                let slots = &positions[&value];
                for perm in permutations(slots.len() as u32) {
                    for (slot, &index) in slots.iter().zip(perm.iter()) {
                        assignment[*slot] = index;
                    }
                    assign(rest, positions, alpha, assignment, chains);
                }
            }
        }
    }
    assign(&values, &positions, alpha, &mut assignment, &mut chains);
    chains.sort();
    chains
}

fn power_sum_core(alpha: &Composition, dualized: bool) -> QSymElement {
    let mut out = QSymElement::zero(Basis::M);
    for chain in power_sum_chains_core(alpha) {
        let expansion = chain_to_m(&chain, dualized);
        for (beta, c) in expansion.terms() {
            out.add_assign_term(beta.clone(), c.clone());
        }
    }
    out
}

/// Monomial expansion of the combinatorial power sum indexed by `alpha`:
/// the sum of chain expansions over the linear extensions of the weight
/// antichain whose weight word is `alpha`. All coefficients are nonnegative
/// integers.
pub fn power_sum(alpha: &Composition) -> Result<QSymElement, QsymError> {
    power_sum_capped(alpha, DEFAULT_DEGREE_CAP)
}

pub fn power_sum_capped(alpha: &Composition, cap: u32) -> Result<QSymElement, QsymError> {
    ensure_expandable(alpha, cap)?;
    Ok(power_sum_core(alpha, false))
}

/// As [`power_sum`] but with labels compared in the natural order (the dual
/// labelling).
pub fn reverse_power_sum(alpha: &Composition) -> Result<QSymElement, QsymError> {
    reverse_power_sum_capped(alpha, DEFAULT_DEGREE_CAP)
}

pub fn reverse_power_sum_capped(alpha: &Composition, cap: u32) -> Result<QSymElement, QsymError> {
    ensure_expandable(alpha, cap)?;
    Ok(power_sum_core(alpha, true))
}

/// The symmetric power sum of a partition, as the sum of combinatorial
/// power sums over all rearrangements. The result is a symmetric function:
/// monomial coefficients are constant on rearrangement classes.
pub fn symmetric_power_sum(lambda: &Partition) -> Result<QSymElement, QsymError> {
    symmetric_power_sum_capped(lambda, DEFAULT_DEGREE_CAP)
}

pub fn symmetric_power_sum_capped(lambda: &Partition, cap: u32) -> Result<QSymElement, QsymError> {
    ensure_expandable(lambda.as_composition(), cap)?;
    let mut out = QSymElement::zero(Basis::M);
    for alpha in lambda.rearrangements() {
        let expansion = power_sum_core(&alpha, false);
        for (beta, c) in expansion.terms() {
            out.add_assign_term(beta.clone(), c.clone());
        }
    }
    Ok(out)
}

/// The monomial symmetric function: the sum of `M_a` over rearrangements.
pub fn monomial_symmetric(lambda: &Partition) -> QSymElement {
    QSymElement::from_terms(
        Basis::M,
        lambda
            .rearrangements()
            .into_iter()
            .map(|alpha| (alpha, coeff::int(1))),
    )
}

/// Fundamental expansion of the combinatorial power sum by the matrix
/// counting rule: the coefficient of `F_b` is
/// `(-1)^(l(b) - l(a v b))` times the count of overlap-constrained fillings
/// for `(alpha, a v b)`.
pub fn power_sum_to_f(alpha: &Composition) -> Result<QSymElement, QsymError> {
    power_sum_to_f_capped(alpha, DEFAULT_DEGREE_CAP)
}

pub fn power_sum_to_f_capped(alpha: &Composition, cap: u32) -> Result<QSymElement, QsymError> {
    let n = alpha.size();
    if n > cap {
        return Err(QsymError::DegreeCap { degree: n, cap });
    }
    let mut out = QSymElement::zero(Basis::F);
    for beta in Composition::all_of(n) {
        let join = alpha.join(&beta).expect("sizes are equal");
        let q = matrices::count_q(alpha, &join).expect("sizes are equal");
        if q == 0 {
            continue;
        }
        let sign = if (beta.len() - join.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        out.add_assign_term(beta, coeff::int(sign * q as i64));
    }
    Ok(out)
}

/// Monomial expansion of the generating function of a weighted labelled
/// poset, via the sum of chain expansions over its linear extensions.
pub fn poset_to_m(p: &WeightedLabelledPoset) -> Result<QSymElement, PosetError> {
    let mut out = QSymElement::zero(Basis::M);
    for extension in p.linear_extensions()? {
        let weights: Vec<u32> = extension
            .entries()
            .iter()
            .map(|label| p.weight_of(p.index_of(label).expect("extension uses poset labels")))
            .collect();
        let expansion = weighted_chain_to_m(extension.entries(), &weights, p.label_dualized());
        for (beta, c) in expansion.terms() {
            out.add_assign_term(beta.clone(), c.clone());
        }
    }
    Ok(out)
}
