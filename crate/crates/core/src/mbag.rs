//! Community detection by walking the maximal-biclique adjacency graph.
//!
//! The adjacency graph is never built. Candidate neighbors of a biclique are
//! the filtered bicliques sharing a vertex with it, found through the
//! per-vertex inverted index.

use std::time::Instant;

use crate::bigraph::VertexId;
use crate::community::{CommunityResult, Stats};
use crate::bigraph::BipartiteGraph;
use crate::mbe::{enumerate_maximal_bicliques, Biclique, MbeOptions, MbeTree};
use crate::sets::intersects_at_least;
use crate::unionfind::DisjointSets;

/// True iff the two bicliques share at least `alpha` U-vertices and at least
/// `beta` V-vertices.
pub fn adjacent(a: &Biclique, b: &Biclique, alpha: usize, beta: usize) -> bool {
    intersects_at_least(&a.x, &b.x, alpha) && intersects_at_least(&a.y, &b.y, beta)
}

/// Candidate lookup over the filtered bicliques of a tree.
pub struct CandidateIndex<'a> {
    tree: &'a MbeTree,
    is_filtered: Vec<bool>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl<'a> CandidateIndex<'a> {
    pub fn new(tree: &'a MbeTree, filtered: &[u32]) -> Self {
        let mut is_filtered = vec![false; tree.len()];
        for &id in filtered {
            is_filtered[id as usize] = true;
        }
        CandidateIndex { tree, is_filtered, stamp: vec![u32::MAX; tree.len()], epoch: 0 }
    }

    /// Distinct filtered IDs other than `b` sharing a vertex with biclique
    /// `b`, ascending.
    pub fn candidates(&mut self, b: u32) -> Vec<u32> {
        let mut out = Vec::new();
        self.candidates_into(b, 0, &mut out);
        out
    }

    /// Like [`candidates`](Self::candidates), restricted to IDs `>= min_id`.
    pub fn candidates_into(&mut self, b: u32, min_id: u32, out: &mut Vec<u32>) {
        out.clear();
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == u32::MAX {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        self.stamp[b as usize] = epoch;
        let bic = self.tree.biclique(b);
        let vertices = bic.x.iter().map(|&u| VertexId::u(u)).chain(bic.y.iter().map(|&v| VertexId::v(v)));
        for x in vertices {
            let list = self.tree.containing(x);
            let start = list.partition_point(|&id| id < min_id);
            for &c in &list[start..] {
                if self.is_filtered[c as usize] && self.stamp[c as usize] != epoch {
                    self.stamp[c as usize] = epoch;
                    out.push(c);
                }
            }
        }
        out.sort_unstable();
    }
}

/// Counters of one adjacency-graph walk.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TraversalCounts {
    pub adjacency_tests: u64,
    pub unions: u64,
}

/// Unions every adjacent pair of filtered bicliques into `uf` (over all IDs
/// of `tree`). Each unordered pair is considered once, from its smaller ID;
/// pairs already in one set are skipped without testing.
pub fn traverse(tree: &MbeTree, alpha: usize, beta: usize, filtered: &[u32], uf: &mut DisjointSets) -> TraversalCounts {
    traverse_with_order(tree, alpha, beta, filtered, uf, |_| {})
}

/// [`traverse`] with a hook that may reorder each candidate list before it
/// is walked.
pub fn traverse_with_order(
    tree: &MbeTree,
    alpha: usize,
    beta: usize,
    filtered: &[u32],
    uf: &mut DisjointSets,
    mut reorder: impl FnMut(&mut Vec<u32>),
) -> TraversalCounts {
    let mut index = CandidateIndex::new(tree, filtered);
    let mut counts = TraversalCounts::default();
    let mut cands = Vec::new();
    for &b in filtered {
        index.candidates_into(b, b + 1, &mut cands);
        reorder(&mut cands);
        for &c in &cands {
            if uf.same(b as usize, c as usize) {
                continue;
            }
            counts.adjacency_tests += 1;
            if adjacent(tree.biclique(b), tree.biclique(c), alpha, beta) && uf.union(b as usize, c as usize) {
                counts.unions += 1;
            }
        }
    }
    counts
}

pub fn detect_mbag(g: &BipartiteGraph, alpha: usize, beta: usize) -> CommunityResult {
    assert!(alpha >= 1 && beta >= 1, "thresholds must be at least 1");
    let start = Instant::now();
    let tree = enumerate_maximal_bicliques(g, &MbeOptions::default());
    let filtered = tree.filter_by_size(alpha, beta);
    let mut uf = DisjointSets::new(tree.len());
    let counts = traverse(&tree, alpha, beta, &filtered, &mut uf);
    let stats = Stats {
        adjacency_tests: counts.adjacency_tests,
        unions: counts.unions,
        mbe_nodes: tree.nodes_visited(),
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
        ..Default::default()
    };
    CommunityResult::from_union_find(&tree, alpha, beta, filtered, &mut uf, stats)
}
