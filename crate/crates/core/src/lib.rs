//! Bicyclic groups: which pairs `(m, n)` force every group `G = ⟨a⟩⟨b⟩`
//! with `|a| = m`, `|b| = n` to be nilpotent, abelian or cyclic, with
//! explicit counterexample groups when they do not, and exhaustive
//! verification over metacyclic (Hölder) presentations.
//!
//! * [`numtheory`]: factorization, `φ`, `rad`, `ψ`, orders, CRT.
//! * [`group`]: the Hölder-presentation group engine and direct products.
//! * [`analysis`]: abelian / nilpotent / cyclic tests and factorization search.
//! * [`classifier`]: the pair criteria, case analysis and witness builders.
//! * [`oracle`]: exhaustive verification, sweeps and counting.
//! * [`report`] and [`cli`]: the JSON/TSV output layer and command line.

pub mod analysis;
pub mod classifier;
pub mod cli;
pub mod group;
pub mod numtheory;
pub mod oracle;
pub mod report;

pub use analysis::{BicyclicWitness, GroupProfile, OrderHistogram};
pub use classifier::{
    build_nonabelian_witness, build_nonnilpotent_witness, classify_pair, is_cyclic_pair,
    is_nilpotent_pair, is_singular_pair, number_class, NumberClass, PairClassification,
};
pub use group::{direct_product, make_holder_group, FiniteGroup, GroupElement, HolderPresentation};
pub use oracle::{
    count_pairs, erdos_estimate, sweep_case_analysis, sweep_nilpotency, sweep_structure,
    verify_pair_exhaustive, PairCounts, VerificationReport,
};
