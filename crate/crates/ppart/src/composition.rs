//! Compositions and partitions with the combinatorial operators the rest of
//! the crate is built on: descent sets, complement/reversal/transpose,
//! refinement and join, shuffles, deconcatenations and the `z` statistic.
//!
//! Invariants:
//! - every part of a [`Composition`] is >= 1 (the empty composition is a
//!   first-class value of size 0 and length 0)
//! - [`Partition`] parts are weakly decreasing
//! - the canonical total order on compositions is graded, then lexicographic
//!   on parts; all enumerations emit it

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompositionError {
    #[error("composition parts must be positive")]
    ZeroPart,
    #[error("parts are not weakly decreasing, so not a partition")]
    NotWeaklyDecreasing,
    #[error("compositions have different sizes ({left} vs {right})")]
    SizeMismatch { left: u32, right: u32 },
    #[error("descent {value} lies outside 1..={}", size.saturating_sub(1))]
    DescentOutOfRange { value: u32, size: u32 },
    #[error("cannot parse composition from `{0}`")]
    Parse(String),
}

/// A finite ordered sequence of positive integers. The universal index type
/// for every quasisymmetric basis in this crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if parts.contains(&0) {
            return Err(CompositionError::ZeroPart);
        }
        Ok(Self { parts })
    }

    /// The empty composition, written `e` in text form.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn single(part: u32) -> Result<Self, CompositionError> {
        Self::new(vec![part])
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts sorted weakly decreasing.
    pub fn underlying_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition {
            comp: Composition { parts },
        }
    }

    /// Multiplicity of each distinct part value.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut counts = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_insert(0) += 1;
        }
        counts
    }

    /// The statistic `z = prod_i i^{r_i} r_i!` over part multiplicities `r_i`.
    pub fn z_value(&self) -> BigUint {
        let mut z = BigUint::one();
        for (value, count) in self.multiplicities() {
            for k in 1..=count {
                z *= BigUint::from(value) * BigUint::from(k);
            }
        }
        z
    }

    /// Partial sums `{a_1, a_1+a_2, ..., a_1+...+a_{l-1}}`, a subset of
    /// `1..size`.
    pub fn descent_set(&self) -> BTreeSet<u32> {
        let mut set = BTreeSet::new();
        let mut sum = 0;
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            sum += p;
            set.insert(sum);
        }
        set
    }

    /// Inverse of [`descent_set`](Self::descent_set) among compositions of
    /// `n`. Rejects any descent outside `1..n`.
    pub fn from_descents<I>(descents: I, n: u32) -> Result<Self, CompositionError>
    where
        I: IntoIterator<Item = u32>,
    {
        let set: BTreeSet<u32> = descents.into_iter().collect();
        for &d in &set {
            if d < 1 || d >= n {
                return Err(CompositionError::DescentOutOfRange { value: d, size: n });
            }
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &d in &set {
            parts.push(d - prev);
            prev = d;
        }
        if n > prev {
            parts.push(n - prev);
        }
        Ok(Self { parts })
    }

    /// Composition whose descent set is the complement inside `1..size`.
    pub fn complement(&self) -> Self {
        let n = self.size();
        let set = self.descent_set();
        let comp: Vec<u32> = (1..n).filter(|d| !set.contains(d)).collect();
        Self::from_descents(comp, n).expect("complement descents are in range")
    }

    pub fn reverse(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Self { parts }
    }

    /// Reverse of the complement (equivalently complement of the reverse).
    pub fn transpose(&self) -> Self {
        self.reverse().complement()
    }

    /// `self` coarsens `finer`: equal sizes and every descent of `self` is a
    /// descent of `finer`. Reflexive.
    pub fn coarsens(&self, finer: &Self) -> bool {
        self.size() == finer.size() && self.descent_set().is_subset(&finer.descent_set())
    }

    /// The unique composition whose coarsenings are exactly the common
    /// coarsenings of `self` and `other`; computed by intersecting descent
    /// sets. Rejects unequal sizes.
    pub fn join(&self, other: &Self) -> Result<Self, CompositionError> {
        let (n, m) = (self.size(), other.size());
        if n != m {
            return Err(CompositionError::SizeMismatch { left: n, right: m });
        }
        let meet: Vec<u32> = self
            .descent_set()
            .intersection(&other.descent_set())
            .copied()
            .collect();
        Self::from_descents(meet, n)
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self { parts }
    }

    /// Every interleaving preserving the relative order of both part
    /// sequences, as a multiset realized with repetitions. Generation order
    /// is recursive with the `self` part taken first, so the count equals
    /// `binomial(l(self)+l(other), l(self))`.
    pub fn shuffles(&self, other: &Self) -> Vec<Composition> {
        fn go(a: &[u32], b: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if a.is_empty() && b.is_empty() {
                out.push(Composition::from_parts_unchecked(prefix.clone()));
                return;
            }
            if let Some((&head, tail)) = a.split_first() {
                prefix.push(head);
                go(tail, b, prefix, out);
                prefix.pop();
            }
            if let Some((&head, tail)) = b.split_first() {
                prefix.push(head);
                go(a, tail, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, &other.parts, &mut Vec::new(), &mut out);
        out
    }

    /// All `len+1` splits `(left, right)` with `left . right = self`, from
    /// `(e, self)` to `(self, e)`.
    pub fn deconcatenations(&self) -> Vec<(Composition, Composition)> {
        (0..=self.parts.len())
            .map(|k| {
                (
                    Composition::from_parts_unchecked(self.parts[..k].to_vec()),
                    Composition::from_parts_unchecked(self.parts[k..].to_vec()),
                )
            })
            .collect()
    }

    /// All `2^(n-1)` compositions of `n` in canonical order.
    pub fn all_of(n: u32) -> Vec<Composition> {
        fn go(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if remaining == 0 {
                out.push(Composition::from_parts_unchecked(prefix.clone()));
                return;
            }
            for first in 1..=remaining {
                prefix.push(first);
                go(remaining - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut out);
        out
    }
}

// Canonical total order: graded, then lexicographic on parts.
impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "e");
        }
        let rendered: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", rendered.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Composition {
    type Err = CompositionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CompositionError::Parse(s.to_string()));
        }
        if s == "e" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let part: u32 = token
                .trim()
                .parse()
                .map_err(|_| CompositionError::Parse(s.to_string()))?;
            parts.push(part);
        }
        Self::new(parts).map_err(|_| CompositionError::Parse(s.to_string()))
    }
}

/// A composition whose parts are weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    comp: Composition,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CompositionError::NotWeaklyDecreasing);
        }
        Ok(Self {
            comp: Composition::new(parts)?,
        })
    }

    pub fn empty() -> Self {
        Self {
            comp: Composition::empty(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        self.comp.parts()
    }

    pub fn size(&self) -> u32 {
        self.comp.size()
    }

    pub fn len(&self) -> usize {
        self.comp.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comp.is_empty()
    }

    pub fn as_composition(&self) -> &Composition {
        &self.comp
    }

    pub fn into_composition(self) -> Composition {
        self.comp
    }

    /// Distinct rearrangements of the parts, in canonical composition order.
    pub fn rearrangements(&self) -> Vec<Composition> {
        fn go(
            counts: &mut BTreeMap<u32, u32>,
            remaining: usize,
            prefix: &mut Vec<u32>,
            out: &mut Vec<Composition>,
        ) {
            if remaining == 0 {
                out.push(Composition::from_parts_unchecked(prefix.clone()));
                return;
            }
            let values: Vec<u32> = counts
                .iter()
                .filter(|&(_, &c)| c > 0)
                .map(|(&v, _)| v)
                .collect();
            for value in values {
                *counts.get_mut(&value).unwrap() -= 1;
                prefix.push(value);
                go(counts, remaining - 1, prefix, out);
                prefix.pop();
                *counts.get_mut(&value).unwrap() += 1;
            }
        }
        let mut counts = self.comp.multiplicities();
        let mut out = Vec::new();
        go(&mut counts, self.len(), &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of `n`, largest-first within each branch, so in
    /// descending lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    comp: Composition::from_parts_unchecked(prefix.clone()),
                });
                return;
            }
            let bound = max_part.min(remaining);
            for part in (1..=bound).rev() {
                prefix.push(part);
                go(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.comp.fmt(f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.comp)
    }
}

impl FromStr for Partition {
    type Err = CompositionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let comp: Composition = s.parse()?;
        Partition::new(comp.parts().to_vec())
    }
}
