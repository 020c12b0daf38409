//! Minimum saturated graphs for disjoint unions of cliques `K_p ∪ (t-1)K_q`.
//!
//! - [`graph`], [`canon`], [`graph6`], [`edgelist`]: bitset graphs, canonical
//!   labelling and text formats.
//! - [`patterns`]: the forbidden pattern and disjoint clique packing.
//! - [`saturation`]: saturation certificates, the extremal construction and
//!   the closed-form saturation number.
//! - [`structure`]: residue objects of a saturated graph and the checks that
//!   evaluate each structural statement on them.
//! - [`search`]: isomorph-free enumeration and exhaustive computation of the
//!   saturation number at small parameters.

pub mod canon;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod parallel;
pub mod patterns;
pub mod saturation;
pub mod search;
pub mod structure;

pub use canon::{canonical_form, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use parallel::Workers;
pub use patterns::{contains_pattern, CliquePattern, Embedding};
pub use saturation::{
    build_extremal, certify_saturated, sat_formula, theorem_n_bound, SaturationVerdict,
};
pub use search::{compute_sat, enumerate_graphs, verify_theorem, SearchOptions, SearchReport};
pub use structure::{audit, residue, ResidueReport, SaturatedGraph};
