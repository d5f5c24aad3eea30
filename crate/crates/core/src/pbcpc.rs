//! Partial communities from the enumeration tree, followed by a reduced
//! adjacency-graph walk.
//!
//! All maximal bicliques below one `(α,β)`-node share its chosen sets, which
//! form an `(α,β)`-biclique, so they belong to one community. The basic
//! method merges each real `(α,β)`-node's subtree. The stop-label method runs
//! inside the enumeration: it also reaches bicliques enumerated earlier in
//! other branches that contain the node's chosen sets, and caches one
//! representative per finished subtree so later searches can stop there.

use std::time::Instant;

use crate::bigraph::{BipartiteGraph, Side, VertexId};
use crate::community::{count_sets, CommunityResult, Stats};
use crate::mbag::traverse;
use crate::mbe::{
    enumerate_maximal_bicliques, enumerate_with_visitor, MbeOptions, MbeTree, NodeId, NodeInfo, NodeVisitor,
    TreeNode, ROOT,
};
use crate::unionfind::DisjointSets;

/// Union-find over all biclique IDs of one enumeration, holding the merges
/// of a partial-community pass.
#[derive(Clone, Debug)]
pub struct PartialBcpcState {
    pub alpha: usize,
    pub beta: usize,
    pub uf: DisjointSets,
    /// Number of sets among the filtered bicliques.
    pub pbcpc: usize,
    /// Tree nodes visited by the stop-label searches (zero for the basic method).
    pub search_nodes: u64,
    /// Chosen sets of every `(α,β)`-node processed, if recording was requested.
    pub ab_prefixes: Vec<(Vec<u32>, Vec<u32>)>,
}

/// Merges the leaves of every real `(α,β)`-node's subtree.
pub fn compute_partial_basic(tree: &MbeTree, alpha: usize, beta: usize) -> PartialBcpcState {
    assert!(tree.is_retained() || tree.is_empty(), "tree must be retained");
    assert_eq!(tree.ab(), Some((alpha, beta)), "tree flags were built for other thresholds");
    let mut uf = DisjointSets::new(tree.len());
    for (id, node) in tree.nodes().iter().enumerate() {
        if node.is_ab {
            let leaves = tree.leaves_below(id as NodeId);
            for &b in &leaves[1..] {
                uf.union(leaves[0] as usize, b as usize);
            }
        }
    }
    let filtered = tree.filter_by_size(alpha, beta);
    let pbcpc = count_sets(&mut uf, &filtered);
    PartialBcpcState { alpha, beta, uf, pbcpc, search_nodes: 0, ab_prefixes: Vec::new() }
}

/// Runs the enumeration with the stop-label pass interleaved and returns the
/// enumeration together with the partial communities.
pub fn compute_partial_plus(g: &BipartiteGraph, alpha: usize, beta: usize, opts: &MbeOptions) -> (MbeTree, PartialBcpcState) {
    compute_partial_plus_impl(g, alpha, beta, opts, false)
}

/// [`compute_partial_plus`] that also records the chosen sets of every
/// `(α,β)`-node, for checking what the searches reached.
pub fn compute_partial_plus_recorded(
    g: &BipartiteGraph,
    alpha: usize,
    beta: usize,
    opts: &MbeOptions,
) -> (MbeTree, PartialBcpcState) {
    compute_partial_plus_impl(g, alpha, beta, opts, true)
}

fn compute_partial_plus_impl(
    g: &BipartiteGraph,
    alpha: usize,
    beta: usize,
    opts: &MbeOptions,
    record: bool,
) -> (MbeTree, PartialBcpcState) {
    let opts = MbeOptions { ab: Some((alpha, beta)), ..opts.clone() };
    let mut pass = PlusPass {
        uf: DisjointSets::new(0),
        pending: Vec::new(),
        in_uv: [vec![0; g.n_u()], vec![0; g.n_v()]],
        in_r: [vec![0; g.n_u()], vec![0; g.n_v()]],
        epoch: 0,
        search_nodes: 0,
        record,
        ab_prefixes: Vec::new(),
    };
    let tree = enumerate_with_visitor(g, &opts, &mut pass);
    let mut uf = pass.uf;
    // IDs of bicliques found after the last union never entered the set.
    let mut full = DisjointSets::new(tree.len());
    for i in 0..uf.len().min(tree.len()) {
        full.union(i, uf.find(i));
    }
    let filtered = tree.filter_by_size(alpha, beta);
    let pbcpc = count_sets(&mut full, &filtered);
    let state = PartialBcpcState {
        alpha,
        beta,
        uf: full,
        pbcpc,
        search_nodes: pass.search_nodes,
        ab_prefixes: pass.ab_prefixes,
    };
    (tree, state)
}

struct PlusPass {
    /// Grows as bicliques are discovered.
    uf: DisjointSets,
    pending: Vec<u32>,
    in_uv: [Vec<u32>; 2],
    in_r: [Vec<u32>; 2],
    epoch: u32,
    search_nodes: u64,
    record: bool,
    ab_prefixes: Vec<(Vec<u32>, Vec<u32>)>,
}

fn side_slot(side: Side) -> usize {
    match side {
        Side::U => 0,
        Side::V => 1,
    }
}

impl PlusPass {
    fn ensure_len(&mut self, id: u32) {
        let need = id as usize + 1;
        if self.uf.len() < need {
            let mut grown = DisjointSets::new(need.max(self.uf.len() * 2));
            for i in 0..self.uf.len() {
                grown.union(i, self.uf.find(i));
            }
            self.uf = grown;
        }
    }

    /// Merges everything in `pending` and returns its representative label.
    fn merge_pending(&mut self) -> Option<u32> {
        let first = *self.pending.first()?;
        let max = *self.pending.iter().max().expect("non-empty");
        self.ensure_len(max);
        for i in 1..self.pending.len() {
            self.uf.union(first as usize, self.pending[i] as usize);
        }
        Some(first)
    }

    fn contains(set: &[Vec<u32>; 2], epoch: u32, x: VertexId) -> bool {
        set[side_slot(x.side)][x.index as usize] == epoch
    }

    /// Walks retained children from `node` in creation order, following only
    /// edges inside `UV`, collecting stop-labels where present and stopping a
    /// sibling list after an edge in `R`.
    fn search(&mut self, arena: &[TreeNode], node: NodeId) {
        for &c in &arena[node as usize].children {
            let child = &arena[c as usize];
            let edge = child.edge.expect("non-root node has an edge");
            if !Self::contains(&self.in_uv, self.epoch, edge) {
                continue;
            }
            self.search_nodes += 1;
            if let Some(st) = child.stop_label {
                self.pending.push(st);
            } else if child.children.is_empty() {
                if let Some(b) = child.biclique {
                    self.pending.push(b);
                }
            } else {
                self.search(arena, c);
            }
            if Self::contains(&self.in_r, self.epoch, edge) {
                break;
            }
        }
    }

    fn process_ab(&mut self, arena: &mut [TreeNode], node: NodeId, info: &NodeInfo<'_>) {
        self.epoch += 1;
        let epoch = self.epoch;
        for (slot, sets) in [(0, [info.r_u, info.c_u, info.x_u]), (1, [info.r_v, info.c_v, info.x_v])] {
            for set in sets {
                for &x in set {
                    self.in_uv[slot][x as usize] = epoch;
                }
            }
        }
        for &u in info.r_u {
            self.in_r[0][u as usize] = epoch;
        }
        for &v in info.r_v {
            self.in_r[1][v as usize] = epoch;
        }
        if self.record {
            let mut ru = info.r_u.to_vec();
            let mut rv = info.r_v.to_vec();
            ru.sort_unstable();
            rv.sort_unstable();
            self.ab_prefixes.push((ru, rv));
        }
        self.pending.clear();
        self.search(arena, ROOT);
        if let Some(st) = self.merge_pending() {
            arena[node as usize].stop_label = Some(st);
        }
    }
}

impl NodeVisitor for PlusPass {
    fn finish_node(&mut self, arena: &mut [TreeNode], node: NodeId, info: &NodeInfo<'_>) {
        if info.is_ab {
            self.process_ab(arena, node, info);
        } else if info.below_ab && info.is_real {
            self.pending = process_node_plus_subtree(arena, node);
            if let Some(st) = self.merge_pending() {
                arena[node as usize].stop_label = Some(st);
            }
        }
    }
}

/// Biclique IDs a real node below an `(α,β)`-node contributes: its own
/// biclique if it is a leaf, otherwise the stop-labels of its children.
pub fn process_node_plus_subtree(arena: &[TreeNode], node: NodeId) -> Vec<u32> {
    let nd = &arena[node as usize];
    if nd.children.is_empty() {
        return nd.biclique.into_iter().collect();
    }
    nd.children
        .iter()
        .map(|&c| arena[c as usize].stop_label.expect("finished real child carries a stop-label"))
        .collect()
}

/// Finishes detection from a partial-community state by walking the
/// adjacency graph, skipping pairs already merged.
pub fn traverse_reduced_mbag(tree: &MbeTree, alpha: usize, beta: usize, mut state: PartialBcpcState, mut stats: Stats) -> CommunityResult {
    assert_eq!((state.alpha, state.beta), (alpha, beta), "state built for other thresholds");
    let filtered = tree.filter_by_size(alpha, beta);
    let counts = traverse(tree, alpha, beta, &filtered, &mut state.uf);
    stats.adjacency_tests += counts.adjacency_tests;
    stats.unions += counts.unions;
    stats.mbe_nodes = tree.nodes_visited();
    CommunityResult::from_union_find(tree, alpha, beta, filtered, &mut state.uf, stats)
}

pub fn detect_pbcpc(g: &BipartiteGraph, alpha: usize, beta: usize) -> CommunityResult {
    assert!(alpha >= 1 && beta >= 1, "thresholds must be at least 1");
    let start = Instant::now();
    let opts = MbeOptions { retain_tree: true, ab: Some((alpha, beta)), ..Default::default() };
    let tree = enumerate_maximal_bicliques(g, &opts);
    let state = compute_partial_basic(&tree, alpha, beta);
    let stats = Stats { pbcpc: Some(state.pbcpc), ..Default::default() };
    let mut r = traverse_reduced_mbag(&tree, alpha, beta, state, stats);
    r.stats.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    r
}

pub fn detect_pbcpc_plus(g: &BipartiteGraph, alpha: usize, beta: usize) -> CommunityResult {
    assert!(alpha >= 1 && beta >= 1, "thresholds must be at least 1");
    let start = Instant::now();
    let (tree, state) = compute_partial_plus(g, alpha, beta, &MbeOptions::default());
    let stats = Stats { pbcpc_plus: Some(state.pbcpc), search_nodes: Some(state.search_nodes), ..Default::default() };
    let mut r = traverse_reduced_mbag(&tree, alpha, beta, state, stats);
    r.stats.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    r
}
