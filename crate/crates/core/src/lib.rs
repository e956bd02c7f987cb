//! Symplectic matroids over the signed ground set `E±n`.
//!
//! A symplectic matroid is a nonempty family of equinumerous admissible
//! subsets of `E±n` on which the greedy algorithm is optimal for every
//! admissible ordering and every compatible weight. This crate checks that
//! definition directly, checks the equivalent independent-set axiom on the
//! downward closure, produces witnesses for families that fail, and sweeps
//! all small families to confirm that the two characterizations agree.
//!
//! Sweeps run on rayon when the default `parallel` feature is enabled.

pub mod axioms;
pub mod enumeration;
pub mod error;
pub mod family_file;
pub mod greedy;
pub mod orderings;
pub mod parallel;
pub mod signed_sets;
pub mod wxyz;

pub use axioms::{
    axiom_holds, check_definition, downward_closure, find_counterexample,
    is_symplectic_matroid_by_definition, maximal_members, AxiomCheckResult, FailureKind, IndependenceFamily,
    Violation, Witness,
};
pub use enumeration::{
    admissible_k_subsets, catalog, sweep_basis_families, sweep_downsets, DownsetReport, EnumerationReport,
};
pub use error::{Error, Result};
pub use family_file::{format_family, parse_family, FamilyFile};
pub use greedy::{
    feasible_extension, gale_dominates, greedy_solution, is_optimal, weight_of, BasisFamily, GreedyStep,
    GreedyTrace,
};
pub use orderings::{
    all_admissible_orderings, is_compatible, random_compatible_weight, threshold_weight, AdmissibleOrdering,
    Weight, WeightFunction,
};
pub use parallel::Execution;
pub use signed_sets::{
    format_set, is_admissible, negate_element, negate_set, parse_set, GroundSize, SignedElement, SignedSubset,
};
pub use wxyz::{wxyz_decompose, wxyz_orderings, wxyz_witness, WitnessStage, WxyzDecomposition, WxyzTrace};
