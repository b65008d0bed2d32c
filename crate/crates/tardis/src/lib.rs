//! Exact algorithms for temporal reachability domination.
//!
//! A temporal graph assigns each edge of a static graph a nonempty set
//! of discrete activity times; a TaRDiS (temporal reachability
//! dominating set) is a vertex set from which every vertex is reachable
//! by a temporal path, strict (increasing times) or nonstrict
//! (nondecreasing). This crate computes minimum TaRDiS sets via subset
//! enumeration, set-cover branch and bound with canonical pruning, a
//! quadratic algorithm on temporal trees, and a dynamic program over
//! nice tree decompositions; and solves the MaxMin variant (choose an
//! assignment maximizing the minimum TaRDiS) by enumeration and by
//! shortcuts through Dominating Set and Distance-3 Independent Set.
//! Reduction-based instance generators tie the solvers to classical
//! problems for cross-validation.

pub mod exact;
pub mod gen;
pub mod graph;
pub mod maxmin;
pub mod reach;
pub mod reductions;
pub mod tree;
pub mod treewidth;
pub mod util;

pub use exact::{
    canonicalize_tardis, decide_tardis_lee, min_tardis_bruteforce, min_tardis_setcover,
    min_tardis_special, quick_reject_strict, Candidates, SolveError, TardisResult,
};
pub use graph::{
    classify, locally_earliest_edges, locally_earliest_endpoints, parse_temporal_graph,
    GraphClass, ParseError, StaticGraph, TemporalGraph, TimeEdge, VertexId,
};
pub use maxmin::{
    d3is_witness_assignment, extract_independent_tardis, happy_assignment_exists, max_d3is,
    maxmin_value, min_dominating_set, quick_reject_strict_maxmin, MaxMinAlgo, MaxMinError,
    MaxMinResult, Variant,
};
pub use reach::{
    closure, foremost_arrivals, is_tardis, reach_set, ForemostTable, ReachClosure, Semantics,
};
pub use reductions::{
    ds_to_strict_tardis, sat_to_happy_tardis, setcover_to_happy, setcover_to_nonstrict,
    CnfFormula3B, ReductionError, SetCoverInstance,
};
pub use tree::min_tardis_tree;
pub use treewidth::{
    compute_tree_decomposition, dp_signature, make_nice, min_tardis_treewidth,
    NiceTreeDecomposition, TreeDecomposition,
};
