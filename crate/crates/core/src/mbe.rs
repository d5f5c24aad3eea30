//! Maximal biclique enumeration over a set-enumeration tree.
//!
//! Each search node carries the chosen sets `R`, the candidate sets `C` and
//! the exclusion sets `X` for both sides. The first level walks U in a vertex
//! order; deeper levels branch on a pivot and its non-neighbors only.
//!
//! When requested, the real part of the search tree (nodes with at least one
//! maximal biclique below them) is kept in an arena, together with the
//! `(α,β)`-node flags used by the partial-community algorithms. A
//! [`NodeVisitor`] can observe every node in postorder while the enumeration
//! is still running.

use std::fmt;

use serde::Serialize;

use crate::bigraph::{BipartiteGraph, Side, VertexId};
use crate::sets::{insert_sorted, intersect, intersect_count, remove_sorted};

/// A biclique `(X, Y)` with both sides stored as strictly increasing index lists.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Biclique {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

impl Biclique {
    pub fn new(mut x: Vec<u32>, mut y: Vec<u32>) -> Self {
        x.sort_unstable();
        x.dedup();
        y.sort_unstable();
        y.dedup();
        Biclique { x, y }
    }

    pub fn is_complete_in(&self, g: &BipartiteGraph) -> bool {
        self.x.iter().all(|&u| self.y.iter().all(|&v| g.has_edge(u, v)))
    }

    pub fn contains(&self, x: VertexId) -> bool {
        match x.side {
            Side::U => self.x.binary_search(&x.index).is_ok(),
            Side::V => self.y.binary_search(&x.index).is_ok(),
        }
    }

    /// `x1,x2,... | y1,y2,...` using the graph's original vertex labels.
    pub fn to_label_string(&self, g: &BipartiteGraph) -> String {
        let mut xs: Vec<u64> = self.x.iter().map(|&u| g.label(VertexId::u(u))).collect();
        let mut ys: Vec<u64> = self.y.iter().map(|&v| g.label(VertexId::v(v))).collect();
        xs.sort_unstable();
        ys.sort_unstable();
        format!("{} | {}", join(&xs), join(&ys))
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Biclique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<u64> = self.x.iter().map(|&u| u as u64).collect();
        let ys: Vec<u64> = self.y.iter().map(|&v| v as u64).collect();
        write!(f, "{} | {}", join(&xs), join(&ys))
    }
}

/// First-level processing order of the U side.
#[derive(Clone, Debug, Default)]
pub enum VertexOrder {
    #[default]
    TwoHop,
    ReversedTwoHop,
    Custom(Vec<u32>),
}

impl VertexOrder {
    fn resolve(&self, g: &BipartiteGraph) -> Vec<u32> {
        match self {
            VertexOrder::TwoHop => g.two_hop_order(),
            VertexOrder::ReversedTwoHop => {
                let mut o = g.two_hop_order();
                o.reverse();
                o
            }
            VertexOrder::Custom(o) => {
                assert_eq!(o.len(), g.n_u(), "custom order must be a permutation of U");
                o.clone()
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct MbeOptions {
    pub retain_tree: bool,
    /// Thresholds used to flag `(α,β)`-nodes.
    pub ab: Option<(usize, usize)>,
    pub pivot: bool,
    pub order: VertexOrder,
}

impl Default for MbeOptions {
    fn default() -> Self {
        MbeOptions { retain_tree: false, ab: None, pivot: true, order: VertexOrder::TwoHop }
    }
}

pub type NodeId = u32;
pub const ROOT: NodeId = 0;

/// A retained node of the enumeration tree.
#[derive(Clone, Debug)]
pub struct TreeNode {
    /// Vertex added to `R` on the edge from the parent; `None` for the root.
    pub edge: Option<VertexId>,
    /// Retained children in creation order.
    pub children: Vec<NodeId>,
    pub stop_label: Option<u32>,
    /// Set iff this is a leaf with empty exclusion sets.
    pub biclique: Option<u32>,
    pub is_ab: bool,
    pub r_u: u32,
    pub r_v: u32,
}

/// What a visitor learns about a node once its subtree is complete.
pub struct NodeInfo<'a> {
    pub r_u: &'a [u32],
    pub r_v: &'a [u32],
    pub c_u: &'a [u32],
    pub c_v: &'a [u32],
    pub x_u: &'a [u32],
    pub x_v: &'a [u32],
    pub is_leaf: bool,
    pub is_real: bool,
    pub is_ab: bool,
    /// Strictly below some `(α,β)`-node.
    pub below_ab: bool,
    pub biclique: Option<u32>,
}

/// Postorder hook invoked while the enumeration is running.
///
/// `arena` holds every node created so far that is real or still open (on
/// the current path). Virtual nodes are removed right after the hook for them
/// returns.
pub trait NodeVisitor {
    fn finish_node(&mut self, arena: &mut [TreeNode], node: NodeId, info: &NodeInfo<'_>);
}

struct NoVisitor;

impl NodeVisitor for NoVisitor {
    fn finish_node(&mut self, _: &mut [TreeNode], _: NodeId, _: &NodeInfo<'_>) {}
}

/// Result of an enumeration: the maximal bicliques in enumeration order, an
/// inverted index from vertices to biclique IDs, and optionally the real-node
/// skeleton of the search tree.
#[derive(Clone, Debug)]
pub struct MbeTree {
    nodes: Vec<TreeNode>,
    bicliques: Vec<Biclique>,
    index_u: Vec<Vec<u32>>,
    index_v: Vec<Vec<u32>>,
    ab: Option<(usize, usize)>,
    nodes_visited: u64,
}

impl MbeTree {
    pub fn bicliques(&self) -> &[Biclique] {
        &self.bicliques
    }

    pub fn biclique(&self, id: u32) -> &Biclique {
        &self.bicliques[id as usize]
    }

    pub fn len(&self) -> usize {
        self.bicliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bicliques.is_empty()
    }

    /// Sorted IDs of the bicliques containing `x`.
    pub fn containing(&self, x: VertexId) -> &[u32] {
        match x.side {
            Side::U => &self.index_u[x.index as usize],
            Side::V => &self.index_v[x.index as usize],
        }
    }

    /// Retained nodes; empty unless the tree was retained.
    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn is_retained(&self) -> bool {
        !self.nodes.is_empty()
    }

    pub fn ab(&self) -> Option<(usize, usize)> {
        self.ab
    }

    /// Number of search nodes entered during enumeration.
    pub fn nodes_visited(&self) -> u64 {
        self.nodes_visited
    }

    /// IDs of bicliques with `|X| >= alpha` and `|Y| >= beta`.
    pub fn filter_by_size(&self, alpha: usize, beta: usize) -> Vec<u32> {
        self.bicliques
            .iter()
            .enumerate()
            .filter(|(_, b)| b.x.len() >= alpha && b.y.len() >= beta)
            .map(|(i, _)| i as u32)
            .collect()
    }

    /// Biclique IDs of all leaves below `node` (inclusive).
    pub fn leaves_below(&self, node: NodeId) -> Vec<u32> {
        let mut out = Vec::new();
        let mut stack = vec![node];
        while let Some(n) = stack.pop() {
            let nd = &self.nodes[n as usize];
            if let Some(b) = nd.biclique {
                out.push(b);
            }
            stack.extend(nd.children.iter().rev());
        }
        out
    }

    /// The chosen sets `(R_U, R_V)` of a retained node, sorted.
    pub fn chosen_sets(&self, node: NodeId) -> (Vec<u32>, Vec<u32>) {
        let mut path = vec![];
        self.path_to(ROOT, node, &mut path);
        let (mut ru, mut rv) = (Vec::new(), Vec::new());
        for n in path {
            match self.nodes[n as usize].edge {
                Some(VertexId { side: Side::U, index }) => ru.push(index),
                Some(VertexId { side: Side::V, index }) => rv.push(index),
                None => {}
            }
        }
        ru.sort_unstable();
        rv.sort_unstable();
        (ru, rv)
    }

    fn path_to(&self, from: NodeId, target: NodeId, path: &mut Vec<NodeId>) -> bool {
        path.push(from);
        if from == target {
            return true;
        }
        for &c in &self.nodes[from as usize].children {
            if self.path_to(c, target, path) {
                return true;
            }
        }
        path.pop();
        false
    }
}

/// Picks the pivot among `X_U ∪ C_U ∪ X_V ∪ C_V` with the fewest
/// non-neighbors in the opposite candidate set, and returns it with the
/// vertices to branch on.
///
/// Ties prefer exclusion-set vertices (they spawn one branch fewer), then U
/// before V, then the lowest index. The branch list is the pivot itself when
/// it is a candidate, followed by its non-neighbors in the opposite candidate
/// set in ascending order.
pub fn select_pivot(
    g: &BipartiteGraph,
    c_u: &[u32],
    c_v: &[u32],
    x_u: &[u32],
    x_v: &[u32],
) -> (VertexId, Vec<VertexId>) {
    debug_assert!(!c_u.is_empty() || !c_v.is_empty());
    let mut best: Option<(usize, u8, Side, u32)> = None;
    let mut consider = |key: (usize, u8, Side, u32)| {
        if best.is_none_or(|b| key < b) {
            best = Some(key);
        }
    };
    for (set, in_c) in [(x_u, 0u8), (c_u, 1u8)] {
        for &u in set {
            let non = c_v.len() - intersect_count(g.neighbors_u(u), c_v);
            consider((non, in_c, Side::U, u));
        }
    }
    for (set, in_c) in [(x_v, 0u8), (c_v, 1u8)] {
        for &v in set {
            let non = c_u.len() - intersect_count(g.neighbors_v(v), c_u);
            consider((non, in_c, Side::V, v));
        }
    }
    let (_, in_c, side, index) = best.expect("pivot candidates are non-empty");
    let pivot = VertexId { side, index };
    let mut branches = Vec::new();
    if in_c == 1 {
        branches.push(pivot);
    }
    let nbrs = g.neighbors(pivot);
    let opposite = match side {
        Side::U => c_v,
        Side::V => c_u,
    };
    branches.extend(
        opposite
            .iter()
            .filter(|w| nbrs.binary_search(w).is_err())
            .map(|&w| VertexId { side: side.other(), index: w }),
    );
    (pivot, branches)
}

pub fn enumerate_maximal_bicliques(g: &BipartiteGraph, opts: &MbeOptions) -> MbeTree {
    run(g, opts, &mut NoVisitor, opts.retain_tree)
}

/// Enumerates with a postorder visitor. The arena is built regardless of
/// `opts.retain_tree`; it is only returned in the tree when retention is on.
pub fn enumerate_with_visitor<V: NodeVisitor>(g: &BipartiteGraph, opts: &MbeOptions, visitor: &mut V) -> MbeTree {
    run(g, opts, visitor, true)
}

fn run<V: NodeVisitor>(g: &BipartiteGraph, opts: &MbeOptions, visitor: &mut V, build: bool) -> MbeTree {
    if let Some((a, b)) = opts.ab {
        assert!(a >= 1 && b >= 1, "thresholds must be at least 1");
    }
    let order = opts.order.resolve(g);
    let mut e = Enumerator {
        g,
        pivot: opts.pivot,
        ab: opts.ab,
        build,
        visitor,
        arena: Vec::new(),
        r_u: Vec::new(),
        r_v: Vec::new(),
        bicliques: Vec::new(),
        nodes_visited: 0,
    };
    e.root(&order);

    let mut index_u = vec![Vec::new(); g.n_u()];
    let mut index_v = vec![Vec::new(); g.n_v()];
    for (id, b) in e.bicliques.iter().enumerate() {
        for &u in &b.x {
            index_u[u as usize].push(id as u32);
        }
        for &v in &b.y {
            index_v[v as usize].push(id as u32);
        }
    }
    let nodes = if opts.retain_tree { e.arena } else { Vec::new() };
    MbeTree {
        nodes,
        bicliques: e.bicliques,
        index_u,
        index_v,
        ab: opts.ab,
        nodes_visited: e.nodes_visited,
    }
}

struct Enumerator<'a, V> {
    g: &'a BipartiteGraph,
    pivot: bool,
    ab: Option<(usize, usize)>,
    build: bool,
    visitor: &'a mut V,
    arena: Vec<TreeNode>,
    r_u: Vec<u32>,
    r_v: Vec<u32>,
    bicliques: Vec<Biclique>,
    nodes_visited: u64,
}

impl<V: NodeVisitor> Enumerator<'_, V> {
    fn new_node(&mut self, parent: Option<NodeId>, edge: Option<VertexId>, is_ab: bool) -> Option<NodeId> {
        if !self.build {
            return None;
        }
        let id = self.arena.len() as NodeId;
        self.arena.push(TreeNode {
            edge,
            children: Vec::new(),
            stop_label: None,
            biclique: None,
            is_ab,
            r_u: self.r_u.len() as u32,
            r_v: self.r_v.len() as u32,
        });
        if let Some(p) = parent {
            self.arena[p as usize].children.push(id);
        }
        Some(id)
    }

    fn drop_node(&mut self, parent: Option<NodeId>, node: Option<NodeId>) {
        if let Some(n) = node {
            self.arena.truncate(n as usize);
            if let Some(p) = parent {
                let popped = self.arena[p as usize].children.pop();
                debug_assert_eq!(popped, Some(n));
            }
        }
    }

    fn root(&mut self, order: &[u32]) {
        let g = self.g;
        self.nodes_visited += 1;
        let root = self.new_node(None, None, false);
        let mut position = vec![0usize; g.n_u()];
        for (i, &u) in order.iter().enumerate() {
            position[u as usize] = i;
        }
        let mut stamp = vec![u32::MAX; g.n_u()];
        let mut real = false;
        let mut done_u: Vec<u32> = Vec::new();
        for (i, &u) in order.iter().enumerate() {
            let nbrs = g.neighbors_u(u);
            if !nbrs.is_empty() {
                // Vertices sharing no neighbor with u can never join a biclique
                // with it, so candidates and exclusions are limited to 2-hop
                // neighbors.
                let hop2 = g.two_hop_neighbors(u, &mut stamp, i as u32);
                let (mut c_u, mut x_u) = (Vec::new(), Vec::new());
                for w in hop2 {
                    if position[w as usize] > i {
                        c_u.push(w);
                    } else {
                        x_u.push(w);
                    }
                }
                self.r_u.push(u);
                real |= self.enum_node(root, VertexId::u(u), c_u, nbrs.to_vec(), x_u, Vec::new(), false);
                self.r_u.pop();
            }
            done_u.push(u);
        }
        done_u.sort_unstable();
        let info = NodeInfo {
            r_u: &[],
            r_v: &[],
            c_u: &[],
            c_v: &[],
            x_u: &done_u,
            x_v: &[],
            is_leaf: false,
            is_real: real,
            is_ab: false,
            below_ab: false,
            biclique: None,
        };
        if let Some(r) = root {
            self.visitor.finish_node(&mut self.arena, r, &info);
        }
    }

    /// Enters the node reached from `parent` by adding `edge` (already pushed
    /// onto `R`). Returns whether the node is real.
    #[allow(clippy::too_many_arguments)]
    fn enum_node(
        &mut self,
        parent: Option<NodeId>,
        edge: VertexId,
        mut c_u: Vec<u32>,
        mut c_v: Vec<u32>,
        mut x_u: Vec<u32>,
        mut x_v: Vec<u32>,
        below_ab: bool,
    ) -> bool {
        self.nodes_visited += 1;
        let is_ab = !below_ab
            && self
                .ab
                .is_some_and(|(a, b)| self.r_u.len() >= a && self.r_v.len() >= b);
        let node = self.new_node(parent, Some(edge), is_ab);
        let g = self.g;

        let is_leaf = c_u.is_empty() && c_v.is_empty();
        let mut real = false;
        let mut biclique = None;
        if is_leaf {
            if x_u.is_empty() && x_v.is_empty() && !self.r_u.is_empty() && !self.r_v.is_empty() {
                let id = self.bicliques.len() as u32;
                self.bicliques.push(Biclique::new(self.r_u.clone(), self.r_v.clone()));
                if let Some(n) = node {
                    self.arena[n as usize].biclique = Some(id);
                }
                biclique = Some(id);
                real = true;
            }
        } else {
            let branches = if self.pivot {
                select_pivot(g, &c_u, &c_v, &x_u, &x_v).1
            } else {
                c_u.iter()
                    .map(|&u| VertexId::u(u))
                    .chain(c_v.iter().map(|&v| VertexId::v(v)))
                    .collect()
            };
            let child_below = below_ab || is_ab;
            for w in branches {
                match w.side {
                    Side::U => {
                        remove_sorted(&mut c_u, w.index);
                        let nbrs = g.neighbors_u(w.index);
                        let cv = intersect(&c_v, nbrs);
                        let xv = intersect(&x_v, nbrs);
                        self.r_u.push(w.index);
                        real |= self.enum_node(node, w, c_u.clone(), cv, x_u.clone(), xv, child_below);
                        self.r_u.pop();
                        insert_sorted(&mut x_u, w.index);
                    }
                    Side::V => {
                        remove_sorted(&mut c_v, w.index);
                        let nbrs = g.neighbors_v(w.index);
                        let cu = intersect(&c_u, nbrs);
                        let xu = intersect(&x_u, nbrs);
                        self.r_v.push(w.index);
                        real |= self.enum_node(node, w, cu, c_v.clone(), xu, x_v.clone(), child_below);
                        self.r_v.pop();
                        insert_sorted(&mut x_v, w.index);
                    }
                }
            }
        }

        if let Some(n) = node {
            let info = NodeInfo {
                r_u: &self.r_u,
                r_v: &self.r_v,
                c_u: &c_u,
                c_v: &c_v,
                x_u: &x_u,
                x_v: &x_v,
                is_leaf,
                is_real: real,
                is_ab,
                below_ab,
                biclique,
            };
            self.visitor.finish_node(&mut self.arena, n, &info);
            if !real {
                self.drop_node(parent, node);
            }
        }
        real
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::parse_edge_list;
    use crate::testutil::{middle_subgraph, powerset_maximal_bicliques, random_graph};

    fn sorted_bicliques(t: &MbeTree) -> Vec<Biclique> {
        let mut v = t.bicliques().to_vec();
        v.sort();
        v
    }

    #[test]
    fn k22_has_one_maximal_biclique() {
        let g = parse_edge_list("0 0\n0 1\n1 0\n1 1", false).unwrap();
        let t = enumerate_maximal_bicliques(&g, &MbeOptions::default());
        assert_eq!(t.bicliques(), &[Biclique::new(vec![0, 1], vec![0, 1])]);
    }

    #[test]
    fn middle_subgraph_bicliques() {
        let g = middle_subgraph();
        let t = enumerate_maximal_bicliques(&g, &MbeOptions::default());
        // indices are label - 1
        let mut expect = vec![
            Biclique::new(vec![0, 1], vec![0, 1, 2]),
            Biclique::new(vec![0, 1, 2], vec![1, 2]),
            Biclique::new(vec![1, 2], vec![1, 2, 3]),
            Biclique::new(vec![1], vec![0, 1, 2, 3]),
        ];
        expect.sort();
        assert_eq!(sorted_bicliques(&t), expect);
        assert_eq!(powerset_maximal_bicliques(&g), expect);
    }

    #[test]
    fn empty_graph() {
        let g = parse_edge_list("", false).unwrap();
        let t = enumerate_maximal_bicliques(&g, &MbeOptions { retain_tree: true, ..Default::default() });
        assert!(t.is_empty());
    }

    #[test]
    fn random_graphs_match_powerset() {
        for seed in 0..30 {
            let g = random_graph(8, 8, 0.3, seed);
            let t = enumerate_maximal_bicliques(&g, &MbeOptions::default());
            assert_eq!(sorted_bicliques(&t), powerset_maximal_bicliques(&g), "seed {seed}");
        }
    }

    #[test]
    fn pivoting_and_order_do_not_change_output() {
        for seed in 0..40 {
            let g = random_graph(9, 7, 0.45, 100 + seed);
            let base = sorted_bicliques(&enumerate_maximal_bicliques(&g, &MbeOptions::default()));
            for pivot in [true, false] {
                for order in [VertexOrder::TwoHop, VertexOrder::ReversedTwoHop] {
                    let opts = MbeOptions { pivot, order, ..Default::default() };
                    let t = enumerate_maximal_bicliques(&g, &opts);
                    let mut raw = t.bicliques().to_vec();
                    raw.sort();
                    raw.dedup();
                    assert_eq!(raw.len(), t.len(), "duplicates, seed {seed}");
                    assert_eq!(raw, base, "seed {seed}");
                }
            }
        }
    }

    #[test]
    fn pivot_single_candidate() {
        let g = parse_edge_list("0 0\n0 1\n1 0\n1 1", false).unwrap();
        let (p, br) = select_pivot(&g, &[0], &[], &[], &[]);
        assert_eq!(p, VertexId::u(0));
        assert_eq!(br, vec![VertexId::u(0)]);
    }

    #[test]
    fn pivot_from_exclusion_prunes_everything() {
        // u0 in X_U is adjacent to every candidate in C_V
        let g = parse_edge_list("0 0\n0 1\n1 0\n1 1\n2 0", false).unwrap();
        let (p, br) = select_pivot(&g, &[1, 2], &[0, 1], &[0], &[]);
        assert_eq!(p, VertexId::u(0));
        assert!(br.is_empty());
    }

    #[test]
    fn pivot_skips_pivot_neighbors() {
        let g = middle_subgraph();
        // after picking u3 (index 2): C_U = {u1,u2}, C_V = {v2,v3,v4}
        let (p, br) = select_pivot(&g, &[0, 1], &[1, 2, 3], &[], &[]);
        // u2 (index 1) is adjacent to every V candidate; it ties with v2 and
        // v3 and wins on side
        assert_eq!(p, VertexId::u(1));
        assert_eq!(br, vec![VertexId::u(1)]);
        // with u2 excluded, u1 has one non-neighbor (v4) and v2 has none
        let (p, br) = select_pivot(&g, &[0], &[1, 2, 3], &[1], &[]);
        assert_eq!(p, VertexId::u(1));
        assert!(br.is_empty());
        let (p, br) = select_pivot(&g, &[0], &[1, 2, 3], &[], &[]);
        assert_eq!(p, VertexId::v(1));
        assert_eq!(br, vec![VertexId::v(1)]);
    }

    #[test]
    fn retained_tree_structure() {
        for seed in 0..40 {
            let g = random_graph(8, 8, 0.4, 500 + seed);
            for ab in [(1, 1), (2, 2), (2, 3), (3, 1)] {
                let opts = MbeOptions { retain_tree: true, ab: Some(ab), ..Default::default() };
                let t = enumerate_maximal_bicliques(&g, &opts);
                check_tree(&t, ab);
            }
        }
    }

    fn check_tree(t: &MbeTree, (a, b): (usize, usize)) {
        if t.is_empty() {
            assert!(t.nodes().len() <= 1);
            return;
        }
        let nodes = t.nodes();
        // every stored node is real
        for id in 0..nodes.len() as NodeId {
            assert!(!t.leaves_below(id).is_empty(), "virtual node {id} retained");
        }
        // leaves with bicliques are in bijection with the biclique list
        let mut ids: Vec<u32> = nodes.iter().filter_map(|n| n.biclique).collect();
        ids.sort_unstable();
        assert_eq!(ids, (0..t.len() as u32).collect::<Vec<_>>());
        for n in nodes {
            assert_eq!(n.biclique.is_some(), n.children.is_empty());
        }
        // ab flags: first node on its path reaching both thresholds, and no
        // ab-node below another
        let mut stack = vec![(ROOT, false)];
        while let Some((id, seen)) = stack.pop() {
            let n = &nodes[id as usize];
            let reaches = n.r_u as usize >= a && n.r_v as usize >= b;
            assert_eq!(n.is_ab, reaches && !seen, "node {id}");
            for &c in &n.children {
                stack.push((c, seen || n.is_ab));
            }
        }
        // each filtered biclique lies under exactly one ab-node
        for id in 0..t.len() as u32 {
            let bic = t.biclique(id);
            let under: usize = (0..nodes.len() as NodeId)
                .filter(|&n| nodes[n as usize].is_ab && t.leaves_below(n).contains(&id))
                .count();
            let expect = usize::from(bic.x.len() >= a && bic.y.len() >= b);
            assert_eq!(under, expect);
        }
        // chosen sets of leaves are their bicliques
        for (id, n) in nodes.iter().enumerate() {
            if let Some(b) = n.biclique {
                let (ru, rv) = t.chosen_sets(id as NodeId);
                assert_eq!(Biclique::new(ru, rv), *t.biclique(b));
            }
        }
    }

    #[test]
    fn inverted_index_is_exact() {
        for seed in 0..20 {
            let g = random_graph(10, 9, 0.35, 900 + seed);
            let t = enumerate_maximal_bicliques(&g, &MbeOptions::default());
            for side in [Side::U, Side::V] {
                for i in 0..g.n_side(side) as u32 {
                    let x = VertexId { side, index: i };
                    let expect: Vec<u32> = (0..t.len() as u32).filter(|&b| t.biclique(b).contains(x)).collect();
                    assert_eq!(t.containing(x), &expect[..]);
                }
            }
        }
    }

    #[test]
    fn filter_by_size_examples() {
        let g = middle_subgraph();
        let t = enumerate_maximal_bicliques(&g, &MbeOptions::default());
        let kept: Vec<Biclique> = t.filter_by_size(2, 2).into_iter().map(|i| t.biclique(i).clone()).collect();
        assert_eq!(kept.len(), 3);
        assert!(kept.iter().all(|b| b.x.len() >= 2));
        assert_eq!(t.filter_by_size(1, 1).len(), t.len());
        assert!(t.filter_by_size(10, 1).is_empty());
    }
}
