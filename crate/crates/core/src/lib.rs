//! Biclique percolation community detection on bipartite graphs.
//!
//! Six detectors produce identical partitions: a direct walk over the
//! maximal-biclique adjacency graph ([`detect_mbag`]), two variants that
//! first merge partial communities read off the enumeration tree
//! ([`detect_pbcpc`], [`detect_pbcpc_plus`]), and three that connect maximal
//! bicliques through enumerated `(α,β)`-bicliques ([`detect_ab_basic`],
//! [`detect_ab_m`], [`detect_ab_p`]). The [`oracle`] module holds exhaustive
//! references for small inputs.

pub mod abenum;
pub mod bigraph;
pub mod cli;
pub mod community;
pub mod error;
pub mod gen;
pub mod mbag;
pub mod mbe;
pub mod oracle;
pub mod pbcpc;
pub mod sets;
pub mod unionfind;

#[cfg(test)]
mod testutil;

pub use abenum::{detect_ab_basic, detect_ab_m, detect_ab_p, detect_ab_pruned, enumerate_ab};
pub use bigraph::{load_edge_list, parse_edge_list, BipartiteGraph, Side, VertexId};
pub use community::{CommunityResult, Stats};
pub use error::{Error, ParseError};
pub use mbag::detect_mbag;
pub use mbe::{enumerate_maximal_bicliques, Biclique, MbeOptions, MbeTree, VertexOrder};
pub use pbcpc::{detect_pbcpc, detect_pbcpc_plus};
pub use unionfind::DisjointSets;
