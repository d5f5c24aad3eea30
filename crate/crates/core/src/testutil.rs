//! Independent brute-force references for unit tests.

use std::collections::BTreeMap;

use crate::bigraph::{parse_edge_list, BipartiteGraph};
use crate::mbe::Biclique;

pub use crate::gen::random_graph;

pub const MIDDLE: &str = "1 1\n1 2\n1 3\n2 1\n2 2\n2 3\n2 4\n3 2\n3 3\n3 4\n";

/// Three U-vertices, four V-vertices; labels 1.. map to indices 0..
pub fn middle_subgraph() -> BipartiteGraph {
    parse_edge_list(MIDDLE, false).unwrap()
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<u32>> {
    (1u32..(1 << n)).map(move |m| (0..n as u32).filter(|&i| m >> i & 1 == 1).collect())
}

fn complete(g: &BipartiteGraph, x: &[u32], y: &[u32]) -> bool {
    x.iter().all(|&u| y.iter().all(|&v| g.has_edge(u, v)))
}

/// Every complete pair of non-empty vertex sets that no single added vertex
/// keeps complete.
pub fn powerset_maximal_bicliques(g: &BipartiteGraph) -> Vec<Biclique> {
    let mut out = Vec::new();
    let ys: Vec<Vec<u32>> = subsets(g.n_v()).collect();
    for x in subsets(g.n_u()) {
        for y in &ys {
            if !complete(g, &x, y) {
                continue;
            }
            let grow_u = (0..g.n_u() as u32).any(|u| !x.contains(&u) && y.iter().all(|&v| g.has_edge(u, v)));
            let grow_v = (0..g.n_v() as u32).any(|v| !y.contains(&v) && x.iter().all(|&u| g.has_edge(u, v)));
            if !grow_u && !grow_v {
                out.push(Biclique::new(x.clone(), y.clone()));
            }
        }
    }
    out.sort();
    out
}

/// Sorted list of all `(α,β)`-bicliques.
pub fn brute_force_ab(g: &BipartiteGraph, alpha: usize, beta: usize) -> Vec<(Vec<u32>, Vec<u32>)> {
    let ys: Vec<Vec<u32>> = subsets(g.n_v()).filter(|y| y.len() == beta).collect();
    let mut out = Vec::new();
    for x in subsets(g.n_u()).filter(|x| x.len() == alpha) {
        for y in &ys {
            if complete(g, &x, y) {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out.sort();
    out
}

/// Communities from pairwise adjacency closed transitively by repeated
/// relabeling.
pub fn oracle_partition(g: &BipartiteGraph, alpha: usize, beta: usize) -> Vec<Vec<Biclique>> {
    let bs: Vec<Biclique> = powerset_maximal_bicliques(g)
        .into_iter()
        .filter(|b| b.x.len() >= alpha && b.y.len() >= beta)
        .collect();
    let shared = |a: &[u32], b: &[u32]| a.iter().filter(|x| b.contains(x)).count();
    let mut label: Vec<usize> = (0..bs.len()).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..bs.len() {
            for j in 0..bs.len() {
                if shared(&bs[i].x, &bs[j].x) >= alpha && shared(&bs[i].y, &bs[j].y) >= beta && label[j] > label[i] {
                    label[j] = label[i];
                    changed = true;
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Biclique>> = BTreeMap::new();
    for (i, b) in bs.into_iter().enumerate() {
        groups.entry(label[i]).or_default().push(b);
    }
    let mut out: Vec<Vec<Biclique>> = groups.into_values().collect();
    for grp in &mut out {
        grp.sort();
    }
    out.sort();
    out
}
