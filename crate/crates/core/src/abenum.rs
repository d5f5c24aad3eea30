//! `(α,β)`-biclique enumeration and the detectors built on it.
//!
//! U-side combinations grow along a 2-hop graph oriented by vertex index;
//! once `α` U-vertices are chosen, `β`-subsets of their common neighborhood
//! are listed in lexicographic order. Every listed `(α,β)`-biclique connects
//! all filtered maximal bicliques containing it. The pruned detectors carry
//! the set `RB` of filtered maximal bicliques containing the current chosen
//! vertices and abandon a branch as soon as `RB` lies inside one union-find
//! set.

use std::time::Instant;

use crate::bigraph::{BipartiteGraph, Side, VertexId};
use crate::community::{CommunityResult, Stats};
use crate::mbe::{enumerate_maximal_bicliques, MbeOptions, MbeTree};
use crate::pbcpc::{compute_partial_plus, PartialBcpcState};
use crate::sets::intersect;
use crate::unionfind::DisjointSets;

/// U-vertices linked `u -> w` when `u < w` and they share a V-neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoHopGraph {
    out: Vec<Vec<u32>>,
}

impl TwoHopGraph {
    pub fn out(&self, u: u32) -> &[u32] {
        &self.out[u as usize]
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, ws)| ws.iter().map(move |&w| (u as u32, w)))
            .collect()
    }
}

pub fn build_two_hop(g: &BipartiteGraph) -> TwoHopGraph {
    let mut stamp = vec![u32::MAX; g.n_u()];
    let out = (0..g.n_u() as u32)
        .map(|u| {
            let hop = g.two_hop_neighbors(u, &mut stamp, u);
            let start = hop.partition_point(|&w| w <= u);
            hop[start..].to_vec()
        })
        .collect();
    TwoHopGraph { out }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    /// U-level listing calls plus V-prefix nodes entered.
    pub tree_nodes: u64,
    pub ab_bicliques_emitted: u64,
    pub unions_performed: u64,
}

/// Calls `sink(X, Y)` once per `(α,β)`-biclique, with both sides ascending.
pub fn enumerate_ab(g: &BipartiteGraph, alpha: usize, beta: usize, mut sink: impl FnMut(&[u32], &[u32])) -> EnumStats {
    let mut mode = Mode::List(&mut sink);
    let mut e = AbEnumerator::new(g, alpha, beta, None, &mut mode);
    e.run();
    e.stats
}

pub fn count_ab(g: &BipartiteGraph, alpha: usize, beta: usize) -> u64 {
    enumerate_ab(g, alpha, beta, |_, _| {}).ab_bicliques_emitted
}

enum Mode<'s> {
    List(&'s mut dyn FnMut(&[u32], &[u32])),
    Connect { uf: DisjointSets, prune: bool },
}

/// Inverted index restricted to filtered maximal bicliques.
struct Containment {
    by_u: Vec<Vec<u32>>,
    by_v: Vec<Vec<u32>>,
    all: Vec<u32>,
}

impl Containment {
    fn new(g: &BipartiteGraph, tree: &MbeTree, filtered: &[u32]) -> Self {
        let mut keep = vec![false; tree.len()];
        for &id in filtered {
            keep[id as usize] = true;
        }
        let lists = |x: VertexId| tree.containing(x).iter().copied().filter(|&i| keep[i as usize]).collect();
        Containment {
            by_u: (0..g.n_u() as u32).map(|u| lists(VertexId::u(u))).collect(),
            by_v: (0..g.n_v() as u32).map(|v| lists(VertexId::v(v))).collect(),
            all: filtered.to_vec(),
        }
    }
}

struct AbEnumerator<'a, 's> {
    g: &'a BipartiteGraph,
    two_hop: TwoHopGraph,
    alpha: usize,
    beta: usize,
    index: Option<Containment>,
    mode: &'a mut Mode<'s>,
    r_u: Vec<u32>,
    r_v: Vec<u32>,
    stats: EnumStats,
}

impl<'a, 's> AbEnumerator<'a, 's> {
    fn new(g: &'a BipartiteGraph, alpha: usize, beta: usize, index: Option<Containment>, mode: &'a mut Mode<'s>) -> Self {
        assert!(alpha >= 1 && beta >= 1, "thresholds must be at least 1");
        AbEnumerator {
            g,
            two_hop: build_two_hop(g),
            alpha,
            beta,
            index,
            mode,
            r_u: Vec::new(),
            r_v: Vec::new(),
            stats: EnumStats::default(),
        }
    }

    fn run(&mut self) {
        let c_u: Vec<u32> = (0..self.g.n_u() as u32).collect();
        let c_v: Vec<u32> = (0..self.g.n_v() as u32).collect();
        let rb = self.index.as_ref().map(|ix| ix.all.clone());
        self.list_u(&c_u, &c_v, rb.as_deref());
    }

    /// True when the branch with biclique set `rb` cannot add a union.
    fn prunable(&mut self, rb: Option<&[u32]>) -> bool {
        match (&mut *self.mode, rb) {
            (Mode::Connect { uf, prune: true }, Some(rb)) => at_most_one_set(uf, rb),
            _ => false,
        }
    }

    fn narrow(&self, rb: Option<&[u32]>, x: VertexId) -> Option<Vec<u32>> {
        let ix = self.index.as_ref()?;
        let list = match x.side {
            Side::U => &ix.by_u[x.index as usize],
            Side::V => &ix.by_v[x.index as usize],
        };
        Some(intersect(rb.expect("biclique set is tracked"), list))
    }

    fn list_u(&mut self, c_u: &[u32], c_v: &[u32], rb: Option<&[u32]>) {
        self.stats.tree_nodes += 1;
        if self.r_u.len() == self.alpha {
            self.list_v(c_v, 0, rb);
            return;
        }
        let need = self.alpha - self.r_u.len() - 1;
        for &u in c_u {
            let cv = intersect(c_v, self.g.neighbors_u(u));
            if cv.len() < self.beta {
                continue;
            }
            let cu = intersect(c_u, self.two_hop.out(u));
            if cu.len() < need {
                continue;
            }
            let rb_next = self.narrow(rb, VertexId::u(u));
            if self.prunable(rb_next.as_deref()) {
                continue;
            }
            self.r_u.push(u);
            self.list_u(&cu, &cv, rb_next.as_deref());
            self.r_u.pop();
        }
    }

    fn list_v(&mut self, c_v: &[u32], from: usize, rb: Option<&[u32]>) {
        if self.r_v.len() == self.beta {
            self.emit(rb);
            return;
        }
        let missing = self.beta - self.r_v.len();
        for i in from..c_v.len() {
            if c_v.len() - i < missing {
                break;
            }
            let v = c_v[i];
            let rb_next = self.narrow(rb, VertexId::v(v));
            if self.prunable(rb_next.as_deref()) {
                continue;
            }
            self.stats.tree_nodes += 1;
            self.r_v.push(v);
            self.list_v(c_v, i + 1, rb_next.as_deref());
            self.r_v.pop();
        }
    }

    fn emit(&mut self, rb: Option<&[u32]>) {
        self.stats.ab_bicliques_emitted += 1;
        match &mut *self.mode {
            Mode::List(sink) => {
                let mut x = self.r_u.clone();
                x.sort_unstable();
                sink(&x, &self.r_v);
            }
            Mode::Connect { uf, .. } => {
                let rb = rb.expect("biclique set is tracked");
                debug_assert!(self.index.is_some());
                for &b in rb.iter().skip(1) {
                    if uf.union(rb[0] as usize, b as usize) {
                        self.stats.unions_performed += 1;
                    }
                }
            }
        }
    }
}

/// Early-exit check that all of `ids` share one representative.
fn at_most_one_set(uf: &mut DisjointSets, ids: &[u32]) -> bool {
    let Some((&first, rest)) = ids.split_first() else {
        return true;
    };
    let root = uf.find(first as usize);
    rest.iter().all(|&i| uf.find(i as usize) == root)
}

fn run_connect(
    g: &BipartiteGraph,
    tree: &MbeTree,
    alpha: usize,
    beta: usize,
    uf: DisjointSets,
    prune: bool,
) -> (DisjointSets, EnumStats) {
    let filtered = tree.filter_by_size(alpha, beta);
    let index = Containment::new(g, tree, &filtered);
    let mut mode = Mode::Connect { uf, prune };
    let stats = {
        let mut e = AbEnumerator::new(g, alpha, beta, Some(index), &mut mode);
        e.run();
        e.stats
    };
    match mode {
        Mode::Connect { uf, .. } => (uf, stats),
        Mode::List(_) => unreachable!(),
    }
}

/// Connects maximal bicliques through every `(α,β)`-biclique, without pruning.
pub fn detect_ab_basic(g: &BipartiteGraph, alpha: usize, beta: usize) -> CommunityResult {
    let start = Instant::now();
    let tree = enumerate_maximal_bicliques(g, &MbeOptions::default());
    let (mut uf, es) = run_connect(g, &tree, alpha, beta, DisjointSets::new(tree.len()), false);
    finish(&tree, alpha, beta, &mut uf, es, Stats::default(), start)
}

/// Pruned enumeration over an existing maximal-biclique enumeration. With a
/// seed state the union-find starts from its partial communities.
pub fn detect_ab_pruned(
    g: &BipartiteGraph,
    tree: &MbeTree,
    alpha: usize,
    beta: usize,
    seed: Option<PartialBcpcState>,
) -> CommunityResult {
    let start = Instant::now();
    let mut stats = Stats::default();
    let uf = match seed {
        Some(state) => {
            assert_eq!((state.alpha, state.beta), (alpha, beta), "seed state built for other thresholds");
            assert_eq!(state.uf.len(), tree.len(), "seed state built for another enumeration");
            stats.pbcpc_plus = Some(state.pbcpc);
            stats.search_nodes = Some(state.search_nodes);
            state.uf
        }
        None => DisjointSets::new(tree.len()),
    };
    let (mut uf, es) = run_connect(g, tree, alpha, beta, uf, true);
    finish(tree, alpha, beta, &mut uf, es, stats, start)
}

/// Maximal-biclique pruned detector with a fresh union-find.
pub fn detect_ab_m(g: &BipartiteGraph, alpha: usize, beta: usize) -> CommunityResult {
    let start = Instant::now();
    let tree = enumerate_maximal_bicliques(g, &MbeOptions::default());
    let mut r = detect_ab_pruned(g, &tree, alpha, beta, None);
    r.stats.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    r
}

/// Partial-community seeded detector.
pub fn detect_ab_p(g: &BipartiteGraph, alpha: usize, beta: usize) -> CommunityResult {
    let start = Instant::now();
    let (tree, state) = compute_partial_plus(g, alpha, beta, &MbeOptions::default());
    let mut r = detect_ab_pruned(g, &tree, alpha, beta, Some(state));
    r.stats.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    r
}

fn finish(
    tree: &MbeTree,
    alpha: usize,
    beta: usize,
    uf: &mut DisjointSets,
    es: EnumStats,
    mut stats: Stats,
    start: Instant,
) -> CommunityResult {
    stats.tree_nodes = Some(es.tree_nodes);
    stats.unions = es.unions_performed;
    stats.mbe_nodes = tree.nodes_visited();
    stats.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let filtered = tree.filter_by_size(alpha, beta);
    CommunityResult::from_union_find(tree, alpha, beta, filtered, uf, stats)
}
