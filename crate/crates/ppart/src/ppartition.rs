//! Brute-force enumeration of P-partitions and the truncated-polynomial
//! realization of poset generating functions. This module is the
//! independent correctness oracle for the basis and Hopf machinery: a
//! degree-`n` quasisymmetric function is determined by its evaluation in
//! `n` ordered variables, so exhaustive enumeration at a finite truncation
//! decides every identity exactly.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::coeff::{self, Coeff};
use crate::composition::Composition;
use crate::poset::WeightedLabelledPoset;
use crate::qsym::{Basis, QSymElement};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TruncationError {
    #[error("{vars} variables cannot determine a degree-{degree} function")]
    TooFewVariables { vars: usize, degree: u32 },
    #[error("polynomial is not homogeneous of degree {expected}: found degree {found}")]
    NotHomogeneous { expected: u32, found: u32 },
    #[error("polynomial is not quasisymmetric: {0}")]
    NotQuasisymmetric(String),
}

/// A sparse polynomial in a fixed number of variables with exact rational
/// coefficients. Exponent vectors always have length `num_vars`; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedPolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

impl TruncatedPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, value: Coeff) -> Self {
        let mut p = Self::zero(num_vars);
        p.add_term(vec![0; num_vars], value);
        p
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, coeff::int(1))
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Coeff {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, value: Coeff) {
        assert_eq!(
            exponents.len(),
            self.num_vars,
            "exponent vector length must equal the variable count"
        );
        if value.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(value);
            }
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scaled(&self, factor: &Coeff) -> Self {
        if factor.is_zero() {
            return Self::zero(self.num_vars);
        }
        Self {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = Self::zero(self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let sum: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(sum, c1 * c2);
            }
        }
        out
    }

    /// Reinterprets this polynomial inside a wider variable set, with this
    /// polynomial's variables starting at `offset`.
    pub fn shift_into(&self, total_vars: usize, offset: usize) -> Self {
        assert!(offset + self.num_vars <= total_vars);
        let mut out = Self::zero(total_vars);
        for (e, c) in &self.terms {
            let mut wide = vec![0; total_vars];
            wide[offset..offset + self.num_vars].copy_from_slice(e);
            out.add_term(wide, c.clone());
        }
        out
    }

    /// Plain text with terms in descending exponent order, e.g.
    /// `1*x1^2 + 2*x1*x2 + 1*x2^2`; the zero polynomial renders as `0`.
    pub fn render_plain(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let monomial = |e: &[u32]| -> String {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|&(_, &exp)| exp > 0)
                .map(|(i, &exp)| {
                    if exp == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, exp)
                    }
                })
                .collect();
            if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("*")
            }
        };
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| format!("{}*{}", coeff::render(c), monomial(e)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| serde_json::json!({ "exponents": e, "coeff": coeff::to_json(c) }))
            .collect();
        serde_json::json!({ "num_vars": self.num_vars, "terms": terms })
    }
}

impl fmt::Debug for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_plain())
    }
}

impl fmt::Display for TruncatedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_plain())
    }
}

/// An order- and strictness-respecting assignment of poset elements to
/// `1..=N`, in the poset's element storage order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PPartition {
    values: Vec<u32>,
}

impl PPartition {
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value_of(&self, element: usize) -> u32 {
        self.values[element]
    }
}

/// All maps `f: P -> [N]` that are order-preserving and strict where the
/// labels descend in the active order, enumerated lexicographically over the
/// element storage order.
pub fn enumerate_ppartitions(p: &WeightedLabelledPoset, n_vars: u32) -> Vec<PPartition> {
    let n = p.len();
    let mut out = Vec::new();
    let mut values: Vec<u32> = Vec::with_capacity(n);
    fn go(
        p: &WeightedLabelledPoset,
        n_vars: u32,
        values: &mut Vec<u32>,
        out: &mut Vec<PPartition>,
    ) {
        let k = values.len();
        if k == p.len() {
            out.push(PPartition {
                values: values.clone(),
            });
            return;
        }
        'candidates: for v in 1..=n_vars {
            for (m, &fm) in values.iter().enumerate() {
                if p.less(m, k) {
                    let strict = p.strict_required(m, k);
                    if fm > v || (strict && fm == v) {
                        continue 'candidates;
                    }
                }
                if p.less(k, m) {
                    let strict = p.strict_required(k, m);
                    if v > fm || (strict && v == fm) {
                        continue 'candidates;
                    }
                }
            }
            values.push(v);
            go(p, n_vars, values, out);
            values.pop();
        }
    }
    go(p, n_vars, &mut values, &mut out);
    out
}

/// The generating function of a weighted labelled poset evaluated in
/// variables `x_1..x_N`: the sum over P-partitions of the weighted monomial
/// `prod_u x_{f(u)}^{w(u)}`.
pub fn k_truncated(p: &WeightedLabelledPoset, n_vars: u32) -> TruncatedPolynomial {
    let mut out = TruncatedPolynomial::zero(n_vars as usize);
    for f in enumerate_ppartitions(p, n_vars) {
        let mut exponents = vec![0u32; n_vars as usize];
        for element in 0..p.len() {
            exponents[(f.value_of(element) - 1) as usize] += p.weight_of(element);
        }
        out.add_term(exponents, coeff::int(1));
    }
    out
}

/// The generating function evaluated in a doubled alphabet: `2N` variables
/// ordered with the first block before the second. Splitting monomials at
/// the block boundary realizes the coproduct, so this is the coproduct
/// oracle.
pub fn two_alphabet_truncation(p: &WeightedLabelledPoset, n_vars: u32) -> TruncatedPolynomial {
    k_truncated(p, 2 * n_vars)
}

/// Evaluation of a quasisymmetric element in `x_1..x_N`: each `M_b` becomes
/// the sum over strictly increasing index tuples.
pub fn m_truncated(e: &QSymElement, n_vars: u32) -> TruncatedPolynomial {
    let m = e.to_m();
    let n_vars = n_vars as usize;
    let mut out = TruncatedPolynomial::zero(n_vars);
    for (beta, c) in m.terms() {
        let parts = beta.parts();
        if parts.len() > n_vars {
            continue;
        }
        // all strictly increasing tuples of length l(beta) in 1..=N
        let mut tuple: Vec<usize> = Vec::with_capacity(parts.len());
        fn go(
            parts: &[u32],
            n_vars: usize,
            start: usize,
            tuple: &mut Vec<usize>,
            c: &Coeff,
            out: &mut TruncatedPolynomial,
        ) {
            if tuple.len() == parts.len() {
                let mut exponents = vec![0u32; n_vars];
                for (k, &var) in tuple.iter().enumerate() {
                    exponents[var] = parts[k];
                }
                out.add_term(exponents, c.clone());
                return;
            }
            let needed = parts.len() - tuple.len();
            for var in start..=(n_vars - needed) {
                tuple.push(var);
                go(parts, n_vars, var + 1, tuple, c, out);
                tuple.pop();
            }
        }
        go(parts, n_vars, 0, &mut tuple, c, &mut out);
    }
    out
}

/// Reads a monomial-basis element back off a truncation: the coefficient of
/// `M_b` is the coefficient of `x_1^{b_1}...x_l^{b_l}`. The input must be
/// a truncation of a homogeneous degree-`n` quasisymmetric function in at
/// least `n` variables; homogeneity and quasisymmetry are checked.
pub fn qsym_from_truncation(
    poly: &TruncatedPolynomial,
    degree: u32,
) -> Result<QSymElement, TruncationError> {
    let n_vars = poly.num_vars();
    if (n_vars as u32) < degree {
        return Err(TruncationError::TooFewVariables {
            vars: n_vars,
            degree,
        });
    }
    // packed composition of each monomial, with its leading representative
    let mut classes: BTreeMap<Composition, (Coeff, usize)> = BTreeMap::new();
    for (exponents, c) in poly.terms() {
        let total: u32 = exponents.iter().sum();
        if total != degree {
            return Err(TruncationError::NotHomogeneous {
                expected: degree,
                found: total,
            });
        }
        let packed: Vec<u32> = exponents.iter().copied().filter(|&e| e > 0).collect();
        let is_leading = exponents.iter().take(packed.len()).all(|&e| e > 0);
        let beta = Composition::new(packed).expect("nonzero exponents are positive");
        let entry = classes.entry(beta.clone()).or_insert((Coeff::zero(), 0));
        entry.1 += 1;
        if is_leading {
            entry.0 = c.clone();
        }
        if &poly.coeff(&leading_exponents(&beta, n_vars)) != c {
            return Err(TruncationError::NotQuasisymmetric(format!(
                "coefficient at exponents {exponents:?} differs from its packed representative"
            )));
        }
    }
    // every class must occupy all of its increasing index tuples
    for (beta, (_, seen)) in &classes {
        let expected = binomial(n_vars as u64, beta.len() as u64);
        if *seen as u64 != expected {
            return Err(TruncationError::NotQuasisymmetric(format!(
                "class {beta} appears {seen} times, expected {expected}"
            )));
        }
    }
    Ok(QSymElement::from_terms(
        Basis::M,
        classes.into_iter().map(|(beta, (c, _))| (beta, c)),
    ))
}

fn leading_exponents(beta: &Composition, n_vars: usize) -> Vec<u32> {
    let mut exponents = vec![0u32; n_vars];
    exponents[..beta.len()].copy_from_slice(beta.parts());
    exponents
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}
