//! Exact computer algebra for quasisymmetric functions built on weighted
//! labelled posets and their P-partitions.
//!
//! The crate provides:
//!
//! - compositions and partitions with their combinatorial operators
//!   ([`composition`]);
//! - finite weighted labelled posets, labelled chains, linear extension and
//!   lower set enumeration ([`poset`]);
//! - brute-force P-partition enumeration and truncated polynomial
//!   evaluation, the independent oracle for everything else
//!   ([`ppartition`]);
//! - the monomial and fundamental bases, chain expansions, and the
//!   combinatorial power sum bases with their matrix-counting coefficient
//!   rules ([`qsym`], [`matrices`]);
//! - products, coproducts and the classical involutions ([`hopf`]);
//! - exhaustive verification suites replaying every identity against the
//!   oracles ([`verify`]), surfaced through a batch CLI ([`cli`]).
//!
//! All coefficients are exact rationals; every enumeration is
//! deterministic. Start with the runnable examples in `examples/` — one per
//! major capability:
//!
//! ```bash
//! cargo run --example power_sum_expansions
//! cargo run --example coefficient_matrices
//! cargo run --example posets_and_partitions
//! cargo run --example hopf_operations
//! cargo run --example oracle_crosschecks
//! ```

pub mod cli;
pub mod coeff;
pub mod composition;
pub mod hopf;
pub mod matrices;
pub mod poset;
pub mod ppartition;
pub mod qsym;
pub mod verify;

pub use coeff::Coeff;
pub use composition::{Composition, CompositionError, Partition};
pub use hopf::{
    coproduct_m, coproduct_oracle, coproduct_power_sum, multiply, multiply_power_sums, omega, psi,
    rho, TensorElement,
};
pub use matrices::{
    count_q, count_r, count_r_symmetric, enumerate_q, enumerate_r, enumerate_r_symmetric,
    FillingMatrix,
};
pub use poset::{LabelledChain, LabelledInteger, PosetError, WeightedLabelledPoset};
pub use ppartition::{
    enumerate_ppartitions, k_truncated, m_truncated, qsym_from_truncation, two_alphabet_truncation,
    PPartition, TruncatedPolynomial, TruncationError,
};
pub use qsym::{
    chain_to_f, chain_to_m, f_to_m, m_to_f, monomial_symmetric, poset_to_m, power_sum,
    power_sum_chains, power_sum_to_f, reverse_power_sum, symmetric_power_sum, Basis, QSymElement,
    QsymError,
};
