//! Finite weighted labelled posets, labelled chains, and the enumeration
//! primitives everything else relies on: linear extensions, lower sets,
//! duals and disjoint unions.
//!
//! Labels live in the chain of labelled positive integers `a_k`, ordered by
//! value first and index second. A poset carries a `label_dualized` flag:
//! `false` means labels are compared in the *reversed* chain (the default
//! convention for the weight antichains and chains in this crate), `true`
//! means the natural order.
//!
//! Elements are identified by their labels, which are injective, so a
//! [`LabelledChain`] fully determines a weighted labelled chain with the
//! natural weight `w(a_k) = a`. The order relation is stored transitively
//! closed; it is validated (irreflexive, antisymmetric, transitive) at
//! construction time.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::composition::{Composition, Partition};

/// Enumeration guard: linear extension and lower set counts explode, so
/// enumerators reject posets larger than this by default. Use the `_capped`
/// variants to override.
pub const DEFAULT_ELEMENT_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("labelled integers need value >= 1 and index >= 1")]
    BadLabel,
    #[error("weights must be >= 1")]
    ZeroWeight,
    #[error("duplicate label {0}")]
    DuplicateLabel(String),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("cover relations contain a cycle")]
    Cycle,
    #[error("label sets overlap at {0}")]
    LabelOverlap(String),
    #[error("cannot combine posets with different label orders")]
    DualizedMismatch,
    #[error("poset has {size} elements, over the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("chain is not a linear extension of the poset")]
    NotAnExtension,
    #[error("cannot parse poset input: {0}")]
    Parse(String),
}

/// A labelled positive integer `a_k`: `value` carries the weight, `index`
/// distinguishes repeats. The derived order (value, then index) is the
/// natural chain; the dual chain is its exact reverse.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelledInteger {
    value: u32,
    index: u32,
}

impl LabelledInteger {
    pub fn new(value: u32, index: u32) -> Result<Self, PosetError> {
        if value == 0 || index == 0 {
            return Err(PosetError::BadLabel);
        }
        Ok(Self { value, index })
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// True when `self` comes before `other` in the active label chain:
    /// the natural order when `dualized`, its reverse otherwise.
    pub fn precedes(&self, other: &Self, dualized: bool) -> bool {
        if dualized {
            self < other
        } else {
            self > other
        }
    }
}

impl fmt::Display for LabelledInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.index)
    }
}

impl fmt::Debug for LabelledInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LabelledInteger {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (value, index) = s
            .trim()
            .split_once('_')
            .ok_or_else(|| PosetError::Parse(format!("bad labelled integer `{s}`")))?;
        let value: u32 = value
            .parse()
            .map_err(|_| PosetError::Parse(format!("bad labelled integer `{s}`")))?;
        let index: u32 = index
            .parse()
            .map_err(|_| PosetError::Parse(format!("bad labelled integer `{s}`")))?;
        LabelledInteger::new(value, index)
    }
}

/// Descent composition of a label word under the active order, with descent
/// positions recorded as partial weight sums.
pub fn weighted_descent_composition(
    labels: &[LabelledInteger],
    weights: &[u32],
    dualized: bool,
) -> Composition {
    assert_eq!(labels.len(), weights.len());
    let total: u32 = weights.iter().sum();
    let mut descents = BTreeSet::new();
    let mut partial = 0;
    for k in 0..labels.len().saturating_sub(1) {
        partial += weights[k];
        // descent at k when the label of u_k comes after the label of u_{k+1}
        if labels[k + 1].precedes(&labels[k], dualized) {
            descents.insert(partial);
        }
    }
    Composition::from_descents(descents, total).expect("partial sums are in range")
}

/// An ordered list of distinct labelled integers, listing the elements of a
/// weighted labelled chain in ascending poset order. Weights are the label
/// values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledChain {
    entries: Vec<LabelledInteger>,
}

impl LabelledChain {
    pub fn new(entries: Vec<LabelledInteger>) -> Result<Self, PosetError> {
        let mut seen = BTreeSet::new();
        for entry in &entries {
            if !seen.insert(*entry) {
                return Err(PosetError::DuplicateLabel(entry.to_string()));
            }
        }
        Ok(Self { entries })
    }

    pub fn empty() -> Self {
        Self {
            entries: Vec::new(),
        }
    }

    pub fn entries(&self) -> &[LabelledInteger] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_weight(&self) -> u32 {
        self.entries.iter().map(|e| e.value()).sum()
    }

    /// The weight composition: label values in chain order.
    pub fn alpha(&self) -> Composition {
        Composition::new(self.entries.iter().map(|e| e.value()).collect())
            .expect("label values are positive")
    }

    /// Descent composition under the active label order. Always coarsens
    /// [`alpha`](Self::alpha).
    pub fn delta(&self, dualized: bool) -> Composition {
        let weights: Vec<u32> = self.entries.iter().map(|e| e.value()).collect();
        weighted_descent_composition(&self.entries, &weights, dualized)
    }

    pub fn reversed(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Self { entries }
    }
}

impl fmt::Display for LabelledChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "e");
        }
        let rendered: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", rendered.join(" "))
    }
}

impl fmt::Debug for LabelledChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for LabelledChain {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(Self::empty());
        }
        let entries: Result<Vec<LabelledInteger>, PosetError> =
            s.split_whitespace().map(|t| t.parse()).collect();
        Self::new(entries?)
    }
}

/// A finite poset with an injective labelling into the labelled integers and
/// positive integer weights.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightedLabelledPoset {
    labels: Vec<LabelledInteger>, // ascending in the natural label order
    weights: Vec<u32>,
    less: Vec<bool>, // row-major strict order matrix, transitively closed
    label_dualized: bool,
}

impl WeightedLabelledPoset {
    /// Builds a poset from elements `(label, weight)` and cover pairs
    /// `(lesser, greater)` given by label. The transitive closure is computed
    /// here and the order axioms are validated.
    pub fn from_covers(
        elements: &[(LabelledInteger, u32)],
        covers: &[(LabelledInteger, LabelledInteger)],
        label_dualized: bool,
    ) -> Result<Self, PosetError> {
        let mut sorted = elements.to_vec();
        sorted.sort_by_key(|(label, _)| *label);
        for window in sorted.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(PosetError::DuplicateLabel(window[0].0.to_string()));
            }
        }
        if sorted.iter().any(|&(_, w)| w == 0) {
            return Err(PosetError::ZeroWeight);
        }
        let labels: Vec<LabelledInteger> = sorted.iter().map(|&(l, _)| l).collect();
        let weights: Vec<u32> = sorted.iter().map(|&(_, w)| w).collect();
        let n = labels.len();
        let index_of = |label: &LabelledInteger| -> Result<usize, PosetError> {
            labels
                .binary_search(label)
                .map_err(|_| PosetError::UnknownElement(label.to_string()))
        };
        let mut less = vec![false; n * n];
        for (lo, hi) in covers {
            let (i, j) = (index_of(lo)?, index_of(hi)?);
            if i == j {
                return Err(PosetError::Cycle);
            }
            less[i * n + j] = true;
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if less[i * n + k] {
                    for j in 0..n {
                        if less[k * n + j] {
                            less[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            if less[i * n + i] {
                return Err(PosetError::Cycle);
            }
        }
        Ok(Self {
            labels,
            weights,
            less,
            label_dualized,
        })
    }

    /// As [`from_covers`](Self::from_covers) with the natural weights
    /// `w(a_k) = a`.
    pub fn naturally_weighted(
        labels: &[LabelledInteger],
        covers: &[(LabelledInteger, LabelledInteger)],
        label_dualized: bool,
    ) -> Result<Self, PosetError> {
        let elements: Vec<(LabelledInteger, u32)> =
            labels.iter().map(|&l| (l, l.value())).collect();
        Self::from_covers(&elements, covers, label_dualized)
    }

    /// The weight antichain of a partition: one element `a_k` per part, no
    /// relations, natural weights, labels compared in the reversed chain.
    pub fn antichain(shape: &Partition) -> Self {
        let mut labels = Vec::with_capacity(shape.len());
        for (value, count) in shape.as_composition().multiplicities() {
            for index in 1..=count {
                labels.push(LabelledInteger { value, index });
            }
        }
        Self::naturally_weighted(&labels, &[], false).expect("antichain labels are distinct")
    }

    /// The total order listed by a labelled chain, with natural weights.
    pub fn chain(chain: &LabelledChain) -> Self {
        let covers: Vec<(LabelledInteger, LabelledInteger)> =
            chain.entries().windows(2).map(|w| (w[0], w[1])).collect();
        Self::naturally_weighted(chain.entries(), &covers, false)
            .expect("chain entries are distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn total_weight(&self) -> u32 {
        self.weights.iter().sum()
    }

    pub fn label_dualized(&self) -> bool {
        self.label_dualized
    }

    /// Element labels in storage order (ascending natural label order).
    pub fn labels(&self) -> &[LabelledInteger] {
        &self.labels
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight_of(&self, element: usize) -> u32 {
        self.weights[element]
    }

    pub fn label_of(&self, element: usize) -> LabelledInteger {
        self.labels[element]
    }

    pub fn index_of(&self, label: &LabelledInteger) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    /// Strict order relation, after closure.
    pub fn less(&self, lo: usize, hi: usize) -> bool {
        self.less[lo * self.labels.len() + hi]
    }

    /// For a related pair `lo < hi`, whether an order-preserving assignment
    /// must be strict there: labels fail to ascend in the active order.
    pub fn strict_required(&self, lo: usize, hi: usize) -> bool {
        !self.labels[lo].precedes(&self.labels[hi], self.label_dualized)
    }

    fn ensure_cap(&self, cap: usize) -> Result<(), PosetError> {
        if self.len() > cap {
            return Err(PosetError::TooLarge {
                size: self.len(),
                cap,
            });
        }
        Ok(())
    }

    /// Every linear extension, reported as a label sequence. Generated by
    /// recursive removal of minimal elements, ties broken ascending in the
    /// natural label order, so the output order is deterministic.
    pub fn linear_extensions(&self) -> Result<Vec<LabelledChain>, PosetError> {
        self.linear_extensions_capped(DEFAULT_ELEMENT_CAP)
    }

    pub fn linear_extensions_capped(&self, cap: usize) -> Result<Vec<LabelledChain>, PosetError> {
        self.ensure_cap(cap)?;
        let n = self.len();
        let mut taken = vec![false; n];
        let mut current = Vec::with_capacity(n);
        let mut out = Vec::new();
        fn go(
            poset: &WeightedLabelledPoset,
            taken: &mut Vec<bool>,
            current: &mut Vec<LabelledInteger>,
            out: &mut Vec<LabelledChain>,
        ) {
            let n = poset.len();
            if current.len() == n {
                out.push(LabelledChain {
                    entries: current.clone(),
                });
                return;
            }
            for i in 0..n {
                if taken[i] {
                    continue;
                }
                let minimal = (0..n).all(|j| taken[j] || !poset.less(j, i));
                if !minimal {
                    continue;
                }
                taken[i] = true;
                current.push(poset.labels[i]);
                go(poset, taken, current, out);
                current.pop();
                taken[i] = false;
            }
        }
        go(self, &mut taken, &mut current, &mut out);
        Ok(out)
    }

    /// Every lower set (downward-closed subset), as sorted element index
    /// vectors, in ascending bitmask order. Includes the empty set and the
    /// whole poset.
    pub fn lower_sets(&self) -> Result<Vec<Vec<usize>>, PosetError> {
        self.lower_sets_capped(DEFAULT_ELEMENT_CAP)
    }

    pub fn lower_sets_capped(&self, cap: usize) -> Result<Vec<Vec<usize>>, PosetError> {
        self.ensure_cap(cap)?;
        let n = self.len();
        let mut below = vec![0u64; n];
        for (i, mask) in below.iter_mut().enumerate() {
            for j in 0..n {
                if self.less(j, i) {
                    *mask |= 1 << j;
                }
            }
        }
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let closed = (0..n).all(|i| mask & (1 << i) == 0 || mask & below[i] == below[i]);
            if closed {
                out.push((0..n).filter(|i| mask & (1 << i) != 0).collect());
            }
        }
        Ok(out)
    }

    /// Same elements, order reversed; labels, weights and the label order
    /// flag are untouched.
    pub fn dual(&self) -> Self {
        let n = self.len();
        let mut less = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                less[i * n + j] = self.less(j, i);
            }
        }
        Self {
            labels: self.labels.clone(),
            weights: self.weights.clone(),
            less,
            label_dualized: self.label_dualized,
        }
    }

    /// Flips the label comparison order; everything else is untouched.
    pub fn dual_labelling(&self) -> Self {
        let mut flipped = self.clone();
        flipped.label_dualized = !flipped.label_dualized;
        flipped
    }

    /// Poset on the disjoint union with no cross relations. Rejects
    /// overlapping label sets and mismatched label order flags.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self, PosetError> {
        if self.label_dualized != other.label_dualized {
            return Err(PosetError::DualizedMismatch);
        }
        if let Some(shared) = self.labels.iter().find(|l| other.index_of(l).is_some()) {
            return Err(PosetError::LabelOverlap(shared.to_string()));
        }
        let elements: Vec<(LabelledInteger, u32)> = self
            .labels
            .iter()
            .zip(&self.weights)
            .chain(other.labels.iter().zip(&other.weights))
            .map(|(&l, &w)| (l, w))
            .collect();
        let mut covers = Vec::new();
        for p in [self, other] {
            let n = p.len();
            for i in 0..n {
                for j in 0..n {
                    if p.less(i, j) {
                        covers.push((p.labels[i], p.labels[j]));
                    }
                }
            }
        }
        Self::from_covers(&elements, &covers, self.label_dualized)
    }

    /// Induced subposet on the given element indices.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let elements: Vec<(LabelledInteger, u32)> = keep
            .iter()
            .map(|&i| (self.labels[i], self.weights[i]))
            .collect();
        let mut covers = Vec::new();
        for &i in keep {
            for &j in keep {
                if self.less(i, j) {
                    covers.push((self.labels[i], self.labels[j]));
                }
            }
        }
        Self::from_covers(&elements, &covers, self.label_dualized)
            .expect("induced subposet is valid")
    }

    /// Complementary index set of a lower set (or any subset).
    pub fn complement_indices(&self, subset: &[usize]) -> Vec<usize> {
        let inside: BTreeSet<usize> = subset.iter().copied().collect();
        (0..self.len()).filter(|i| !inside.contains(i)).collect()
    }

    /// The total order given by a linear extension of this poset, keeping
    /// this poset's weights and label order flag. Rejects chains that skip
    /// elements or contradict the order.
    pub fn extension_poset(&self, extension: &LabelledChain) -> Result<Self, PosetError> {
        let indices: Vec<usize> = extension
            .entries()
            .iter()
            .map(|label| {
                self.index_of(label)
                    .ok_or_else(|| PosetError::UnknownElement(label.to_string()))
            })
            .collect::<Result<_, PosetError>>()?;
        if indices.len() != self.len() {
            return Err(PosetError::NotAnExtension);
        }
        for (position, &later) in indices.iter().enumerate() {
            if indices[..position]
                .iter()
                .any(|&earlier| self.less(later, earlier))
            {
                return Err(PosetError::NotAnExtension);
            }
        }
        let elements: Vec<(LabelledInteger, u32)> = indices
            .iter()
            .map(|&i| (self.labels[i], self.weights[i]))
            .collect();
        let covers: Vec<(LabelledInteger, LabelledInteger)> = extension
            .entries()
            .windows(2)
            .map(|w| (w[0], w[1]))
            .collect();
        Self::from_covers(&elements, &covers, self.label_dualized)
    }

    /// Parses the poset text format:
    ///
    /// ```text
    /// elements: 1_1, 1_2, 2_1
    /// covers: 1_1<2_1; 1_2<2_1
    /// dualized: false
    /// ```
    ///
    /// The `covers` and `dualized` lines are optional; weights are the label
    /// values. Blank lines and `#` comments are skipped.
    pub fn from_text(text: &str) -> Result<Self, PosetError> {
        let mut elements: Option<Vec<LabelledInteger>> = None;
        let mut covers: Vec<(LabelledInteger, LabelledInteger)> = Vec::new();
        let mut dualized = false;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| PosetError::Parse(format!("expected `key: ...` in `{line}`")))?;
            match key.trim() {
                "elements" => {
                    let mut parsed = Vec::new();
                    for token in rest.split(',') {
                        let token = token.trim();
                        if token.is_empty() {
                            continue;
                        }
                        parsed.push(token.parse()?);
                    }
                    elements = Some(parsed);
                }
                "covers" => {
                    for pair in rest.split(';') {
                        let pair = pair.trim();
                        if pair.is_empty() {
                            continue;
                        }
                        let (lo, hi) = pair.split_once('<').ok_or_else(|| {
                            PosetError::Parse(format!("expected `a_k<b_j` in `{pair}`"))
                        })?;
                        covers.push((lo.trim().parse()?, hi.trim().parse()?));
                    }
                }
                "dualized" => {
                    dualized = match rest.trim() {
                        "true" => true,
                        "false" => false,
                        other => {
                            return Err(PosetError::Parse(format!(
                                "dualized must be true or false, got `{other}`"
                            )))
                        }
                    };
                }
                other => {
                    return Err(PosetError::Parse(format!("unknown key `{other}`")));
                }
            }
        }
        let elements =
            elements.ok_or_else(|| PosetError::Parse("missing `elements:` line".to_string()))?;
        Self::naturally_weighted(&elements, &covers, dualized)
    }
}

impl fmt::Debug for WeightedLabelledPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let relations: Vec<String> = (0..self.len())
            .flat_map(|i| {
                (0..self.len())
                    .filter(move |&j| self.less(i, j))
                    .map(move |j| format!("{}<{}", self.labels[i], self.labels[j]))
            })
            .collect();
        write!(
            f,
            "Poset{{elements: {:?}, relations: [{}], dualized: {}}}",
            self.labels,
            relations.join(", "),
            self.label_dualized
        )
    }
}
