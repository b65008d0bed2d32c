//! Treewidth route: tree decompositions, nice conversion, PACE formats
//! and the signature dynamic program.

pub mod decomp;
pub mod dp;
pub mod pace;

pub use decomp::{
    compute_tree_decomposition, make_nice, NiceNode, NiceTreeDecomposition, NodeKind,
    TdError, TreeDecomposition,
};
pub use dp::{dp_signature, min_tardis_treewidth, SignatureTable, DEFAULT_STATE_BUDGET};
pub use pace::{parse_gr, parse_td, write_gr, write_td};
