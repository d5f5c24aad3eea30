//! Bipartite graph storage and edge-list ingestion.
//!
//! Vertices on each side are dense 0-based indices. The original integer
//! labels from the input file are kept so results can be reported in the
//! caller's namespace.

use std::collections::HashMap;
use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, ParseError};

/// Which side of the bipartition a vertex lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    U,
    V,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::U => Side::V,
            Side::V => Side::U,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub side: Side,
    pub index: u32,
}

impl VertexId {
    pub fn u(index: u32) -> Self {
        VertexId { side: Side::U, index }
    }

    pub fn v(index: u32) -> Self {
        VertexId { side: Side::V, index }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::U => write!(f, "u{}", self.index),
            Side::V => write!(f, "v{}", self.index),
        }
    }
}

/// Immutable two-sided adjacency structure.
///
/// Both adjacency directions are stored as sorted, deduplicated index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    adj_u: Vec<Vec<u32>>,
    adj_v: Vec<Vec<u32>>,
    labels_u: Vec<u64>,
    labels_v: Vec<u64>,
    m: usize,
}

impl BipartiteGraph {
    /// Builds a graph over `n_u` x `n_v` dense vertices. Labels default to the
    /// indices themselves; duplicate edges are collapsed.
    ///
    /// Panics if an edge endpoint is out of range.
    pub fn from_edges(n_u: usize, n_v: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut adj_u = vec![Vec::new(); n_u];
        for (u, v) in edges {
            assert!((u as usize) < n_u && (v as usize) < n_v, "edge ({u},{v}) out of range");
            adj_u[u as usize].push(v);
        }
        Self::from_adjacency(
            adj_u,
            n_v,
            (0..n_u as u64).collect(),
            (0..n_v as u64).collect(),
        )
    }

    fn from_adjacency(mut adj_u: Vec<Vec<u32>>, n_v: usize, labels_u: Vec<u64>, labels_v: Vec<u64>) -> Self {
        let mut adj_v = vec![Vec::new(); n_v];
        let mut m = 0;
        for (u, list) in adj_u.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
            for &v in list.iter() {
                adj_v[v as usize].push(u as u32);
            }
        }
        // u is visited in ascending order, so each adj_v list is already sorted.
        BipartiteGraph { adj_u, adj_v, labels_u, labels_v, m }
    }

    pub fn n_u(&self) -> usize {
        self.adj_u.len()
    }

    pub fn n_v(&self) -> usize {
        self.adj_v.len()
    }

    pub fn n_side(&self, side: Side) -> usize {
        match side {
            Side::U => self.n_u(),
            Side::V => self.n_v(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Sorted neighbor indices (on the opposite side) of `x`.
    pub fn neighbors(&self, x: VertexId) -> &[u32] {
        match x.side {
            Side::U => &self.adj_u[x.index as usize],
            Side::V => &self.adj_v[x.index as usize],
        }
    }

    pub fn neighbors_u(&self, u: u32) -> &[u32] {
        &self.adj_u[u as usize]
    }

    pub fn neighbors_v(&self, v: u32) -> &[u32] {
        &self.adj_v[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj_u[u as usize].binary_search(&v).is_ok()
    }

    pub fn label(&self, x: VertexId) -> u64 {
        match x.side {
            Side::U => self.labels_u[x.index as usize],
            Side::V => self.labels_v[x.index as usize],
        }
    }

    /// All edges as (u, v) index pairs, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj_u
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u as u32, v)))
    }

    /// Same graph with the roles of U and V exchanged.
    pub fn swapped(&self) -> BipartiteGraph {
        BipartiteGraph {
            adj_u: self.adj_v.clone(),
            adj_v: self.adj_u.clone(),
            labels_u: self.labels_v.clone(),
            labels_v: self.labels_u.clone(),
            m: self.m,
        }
    }

    /// Checks the structural invariants: symmetric adjacency, strictly
    /// increasing lists, consistent edge count.
    pub fn check_invariants(&self) -> bool {
        let sorted = |lists: &[Vec<u32>], bound: usize| {
            lists
                .iter()
                .all(|l| l.windows(2).all(|w| w[0] < w[1]) && l.iter().all(|&x| (x as usize) < bound))
        };
        if !sorted(&self.adj_u, self.n_v()) || !sorted(&self.adj_v, self.n_u()) {
            return false;
        }
        let sum_u: usize = self.adj_u.iter().map(Vec::len).sum();
        let sum_v: usize = self.adj_v.iter().map(Vec::len).sum();
        if sum_u != self.m || sum_v != self.m {
            return false;
        }
        self.adj_u.iter().enumerate().all(|(u, list)| {
            list.iter()
                .all(|&v| self.adj_v[v as usize].binary_search(&(u as u32)).is_ok())
        })
    }

    /// U-vertices sorted by ascending 2-hop degree, ties by index.
    ///
    /// The 2-hop degree of `u` is the number of distinct other U-vertices that
    /// share at least one neighbor with it.
    pub fn two_hop_order(&self) -> Vec<u32> {
        let degrees = self.two_hop_degrees();
        let mut order: Vec<u32> = (0..self.n_u() as u32).collect();
        order.sort_by_key(|&u| (degrees[u as usize], u));
        order
    }

    pub fn two_hop_degrees(&self) -> Vec<usize> {
        let n = self.n_u();
        let mut stamp = vec![u32::MAX; n];
        let mut degrees = vec![0; n];
        for u in 0..n {
            let mut count = 0;
            stamp[u] = u as u32;
            for &v in &self.adj_u[u] {
                for &w in &self.adj_v[v as usize] {
                    if stamp[w as usize] != u as u32 {
                        stamp[w as usize] = u as u32;
                        count += 1;
                    }
                }
            }
            degrees[u] = count;
        }
        degrees
    }

    /// Sorted list of U-vertices other than `u` sharing a neighbor with `u`.
    pub(crate) fn two_hop_neighbors(&self, u: u32, stamp: &mut [u32], epoch: u32) -> Vec<u32> {
        let mut out = Vec::new();
        stamp[u as usize] = epoch;
        for &v in &self.adj_u[u as usize] {
            for &w in &self.adj_v[v as usize] {
                if stamp[w as usize] != epoch {
                    stamp[w as usize] = epoch;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Writes the graph as a label edge list that reloads to an identical
    /// graph.
    ///
    /// Edges are emitted so that first appearances introduce vertices in
    /// index order on both sides. Graphs that did not come from
    /// [`load_edge_list`] may have no such order; for those the output still
    /// contains every edge exactly once.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (u, v) in self.canonical_edge_order() {
            writeln!(out, "{} {}", self.labels_u[u as usize], self.labels_v[v as usize])?;
        }
        Ok(())
    }

    fn canonical_edge_order(&self) -> Vec<(u32, u32)> {
        let (n_u, n_v) = (self.n_u(), self.n_v());
        let mut order = Vec::with_capacity(self.m);
        let (mut nu, mut nv) = (0usize, 0usize);
        // Emit the edges of a newly introduced vertex towards already seen
        // vertices of the other side.
        let introduce_u = |u: usize, nv: usize, order: &mut Vec<(u32, u32)>| {
            for &v in self.adj_u[u].iter().take_while(|&&v| (v as usize) < nv) {
                order.push((u as u32, v));
            }
        };
        let introduce_v = |v: usize, nu: usize, order: &mut Vec<(u32, u32)>| {
            for &u in self.adj_v[v].iter().take_while(|&&u| (u as usize) < nu) {
                order.push((u, v as u32));
            }
        };
        while nu < n_u || nv < n_v {
            let u_ready = nu < n_u && self.adj_u[nu].first().is_some_and(|&v| (v as usize) < nv);
            let v_ready = nv < n_v && self.adj_v[nv].first().is_some_and(|&u| (u as usize) < nu);
            if u_ready {
                introduce_u(nu, nv, &mut order);
                nu += 1;
            } else if v_ready {
                introduce_v(nv, nu, &mut order);
                nv += 1;
            } else if nu < n_u && nv < n_v && self.has_edge(nu as u32, nv as u32) {
                order.push((nu as u32, nv as u32));
                introduce_u(nu, nv, &mut order);
                introduce_v(nv, nu, &mut order);
                nu += 1;
                nv += 1;
            } else if nu < n_u {
                // No first-appearance order exists from here; the remaining
                // edges of this vertex are emitted when their partners appear.
                introduce_u(nu, nv, &mut order);
                nu += 1;
            } else {
                introduce_v(nv, nu, &mut order);
                nv += 1;
            }
        }
        order
    }
}

/// Parses a whitespace-separated edge list.
///
/// Lines starting with `%` or `#` are comments and blank lines are skipped.
/// Labels are compacted to dense indices per side in first-appearance order.
/// With `side_swap` the first column is read as the V side.
pub fn load_edge_list<R: BufRead>(reader: R, side_swap: bool) -> Result<BipartiteGraph, Error> {
    let mut ids_u: HashMap<u64, u32> = HashMap::new();
    let mut ids_v: HashMap<u64, u32> = HashMap::new();
    let mut labels_u = Vec::new();
    let mut labels_v = Vec::new();
    let mut adj_u: Vec<Vec<u32>> = Vec::new();

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::new(
                lineno + 1,
                format!("expected 2 tokens, found {}", tokens.len()),
            )
            .into());
        }
        let mut parsed = [0u64; 2];
        for (slot, tok) in parsed.iter_mut().zip(&tokens) {
            *slot = tok
                .parse()
                .map_err(|_| ParseError::new(lineno + 1, format!("invalid vertex label {tok:?}")))?;
        }
        let (a, b) = if side_swap { (parsed[1], parsed[0]) } else { (parsed[0], parsed[1]) };

        let u = *ids_u.entry(a).or_insert_with(|| {
            labels_u.push(a);
            adj_u.push(Vec::new());
            (labels_u.len() - 1) as u32
        });
        let v = *ids_v.entry(b).or_insert_with(|| {
            labels_v.push(b);
            (labels_v.len() - 1) as u32
        });
        adj_u[u as usize].push(v);
    }

    let n_v = labels_v.len();
    Ok(BipartiteGraph::from_adjacency(adj_u, n_v, labels_u, labels_v))
}

pub fn parse_edge_list(text: &str, side_swap: bool) -> Result<BipartiteGraph, Error> {
    load_edge_list(text.as_bytes(), side_swap)
}
