//! Seeded synthetic graph generators.

use std::io::{self, Write};

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bigraph::{BipartiteGraph, VertexId};

/// Each of the `n_u * n_v` possible edges is present with probability `p`.
pub fn random_graph(n_u: usize, n_v: usize, p: f64, seed: u64) -> BipartiteGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n_u as u32 {
        for v in 0..n_v as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    BipartiteGraph::from_edges(n_u, n_v, edges)
}

/// A chain of `blocks` complete `size x size` blocks; block `i` covers U and
/// V indices `[i*(size-overlap), i*(size-overlap)+size)`, so consecutive
/// blocks share `overlap` vertices on each side.
pub fn blocks_chain(blocks: usize, size: usize, overlap: usize) -> BipartiteGraph {
    assert!(overlap < size, "overlap must be smaller than the block size");
    if blocks == 0 {
        return BipartiteGraph::from_edges(0, 0, []);
    }
    let step = size - overlap;
    let n = (blocks - 1) * step + size;
    let mut edges = Vec::with_capacity(blocks * size * size);
    for b in 0..blocks {
        let lo = (b * step) as u32;
        for u in lo..lo + size as u32 {
            for v in lo..lo + size as u32 {
                edges.push((u, v));
            }
        }
    }
    BipartiteGraph::from_edges(n, n, edges)
}

/// Keeps exactly `round(fraction * m)` edges chosen uniformly, preserving
/// their order and labels.
pub fn sample_edges(g: &BipartiteGraph, fraction: f64, seed: u64) -> Vec<(u64, u64)> {
    assert!((0.0..=1.0).contains(&fraction), "fraction must lie in [0, 1]");
    let edges: Vec<(u32, u32)> = g.edges().collect();
    let keep = ((fraction * edges.len() as f64).round() as usize).min(edges.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = sample(&mut rng, edges.len(), keep).into_vec();
    chosen.sort_unstable();
    chosen
        .into_iter()
        .map(|i| {
            let (u, v) = edges[i];
            (g.label(VertexId::u(u)), g.label(VertexId::v(v)))
        })
        .collect()
}

/// Writes `g`'s edges as `u v` label lines in adjacency order.
pub fn write_graph<W: Write>(g: &BipartiteGraph, out: W) -> io::Result<()> {
    let labeled: Vec<(u64, u64)> =
        g.edges().map(|(u, v)| (g.label(VertexId::u(u)), g.label(VertexId::v(v)))).collect();
    write_edges(&labeled, out)
}

pub fn write_edges<W: Write>(edges: &[(u64, u64)], mut out: W) -> io::Result<()> {
    for (u, v) in edges {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()
}
