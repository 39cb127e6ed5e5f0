//! Exact coloring solvers for threshold and split graphs.
//!
//! The crate bundles three solver families around a shared graph core:
//!
//! - precoloring extension on graphs a few deletions away from a clique
//!   (list refinement + bipartite matching),
//! - equitable coloring, polynomial on threshold graphs and fixed-parameter
//!   in the deletion distance to threshold graphs (guessing + network flow),
//! - list coloring on split graphs (clique enumeration + greedy extension),
//!   with the independent-set reduction as a hard-instance generator.
//!
//! Supporting pieces: threshold/split recognition with certificates,
//! modulator search by bounded branching, Hopcroft–Karp matching, Dinic
//! max-flow, DIMACS I/O, seeded generators, and exhaustive reference
//! oracles for testing.

use thiserror::Error as ThisError;

pub mod equitable;
pub mod flow;
pub mod generate;
pub mod graph;
pub mod io;
pub mod listcolor;
pub mod modulator;
pub mod oracle;
pub mod precolor;
pub mod recognize;

pub use equitable::{
    kernel_reject, solve_equitable_fpt, solve_equitable_threshold, verify_equitable,
    ClassSizeProfile, EquitableInstance, KernelDecision,
};
pub use flow::{max_flow, max_matching, BipartiteGraph, FlowNetwork, MaxFlowResult};
pub use generate::{gen_perturbed, gen_threshold, ThresholdStep};
pub use graph::{is_proper, Color, Coloring, Graph, ListAssignment, Vertex};
pub use listcolor::{
    equivalence_check, reduce_is_to_listcolor, solve_list_split, ListInstance, ReductionOutput,
};
pub use modulator::{clique_modulator, threshold_modulator, Modulator, TargetClass};
pub use oracle::{
    oracle_equitable, oracle_independent_set, oracle_list, oracle_precolor, OracleBudget,
};
pub use precolor::{
    clique_color_matching, refine_lists, solve_precolor, PrecolorInstance, RefinedLists,
};
pub use recognize::{
    containment_order, recognize_threshold, split_partition, ForbiddenKind, ForbiddenWitness,
    SplitPartition, ThresholdCertificate,
};

/// Crate-wide error type.
#[derive(Debug, ThisError, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("graph is not a threshold graph")]
    NotThreshold,
    #[error("coloring is partial: vertex {0} has no color")]
    PartialColoring(Vertex),
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
}
