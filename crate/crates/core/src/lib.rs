//! Hamilton paths in dominating graphs.
//!
//! The dominating graph `D(H)` of a graph `H` has one node per dominating set
//! of `H`, with two nodes adjacent when the sets differ in a single vertex. A
//! Hamilton path of `D(H)` is a Gray code for the dominating sets of `H`.
//!
//! This crate builds such paths constructively:
//!
//! * trees, by peeling off leaves with two local reductions and lifting the
//!   trivial path of the remaining one- or two-vertex graph back out
//!   ([`tree::hamilton_path_tree`]);
//! * cycles `C_n` with `n ≢ 0 (mod 4)`, by filtering the binary reflected Gray
//!   code ([`cycle::hamilton_path_cycle`]);
//! * unicyclic graphs whose pendant trees reduce onto the cycle
//!   ([`composer::hamilton_path_auto`]).
//!
//! Everything else goes to a bounded exhaustive search in [`oracle`], which
//! also verifies paths and certifies non-existence on small instances.

pub mod composer;
pub mod cycle;
pub mod domination;
pub mod error;
pub mod generators;
pub mod graph;
pub mod lifting;
pub mod oracle;
pub mod path;
pub mod reduction;
pub mod tree;
mod vertex_set;

pub use composer::{hamilton_path_auto, hamilton_path_with, Budget, Method, Outcome};
pub use cycle::{brgc, filter_circular, hamilton_path_cycle, BinaryString, CycleOutcome};
pub use domination::{
    build_dominating_graph, enumerate_dominating_sets, is_dominating, DomGraph, DEFAULT_NODE_BUDGET,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use lifting::{compute_j, lift_op1, lift_op2, LiftContextOpI, LiftContextOpII};
pub use oracle::{
    brute_force_hamilton_path, parity_check, verify_hamilton_path, NeighborOrder, SearchOptions,
    SearchOutcome,
};
pub use path::HamPath;
pub use reduction::{
    apply_op1, apply_op2, find_reduction, reduce_tree_to_base, reduce_unicyclic, Reduction,
    ReductionTrace,
};
pub use tree::{base_path, hamilton_path_tree};
pub use vertex_set::{VertexSet, MAX_VERTICES};
