//! Exhaustive reference implementations for small graphs.

use std::collections::VecDeque;

use crate::bigraph::BipartiteGraph;
use crate::community::canonical_partition;
use crate::error::Error;
use crate::mbag::adjacent;
use crate::mbe::Biclique;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest allowed size of the smaller side.
    pub max_side: usize,
    /// Cap on pairwise work (biclique pairs or subset combinations).
    pub max_pairs: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_side: 16, max_pairs: 10_000_000 }
    }
}

fn check_side(g: &BipartiteGraph, limits: &OracleLimits) -> Result<(), Error> {
    let small = g.n_u().min(g.n_v());
    if small > limits.max_side {
        return Err(Error::OracleLimit(format!(
            "smaller side has {small} vertices, limit is {}",
            limits.max_side
        )));
    }
    Ok(())
}

/// Common neighborhood of `set`, where `adj` lists each member's neighbors
/// over a universe of `n` vertices.
fn common(adj: impl Fn(u32) -> Vec<u32>, set: &[u32], n: usize) -> Vec<u32> {
    let mut acc: Vec<u32> = (0..n as u32).collect();
    for &x in set {
        let nb = adj(x);
        acc.retain(|y| nb.binary_search(y).is_ok());
    }
    acc
}

/// All maximal bicliques with both sides non-empty, sorted.
pub fn oracle_maximal_bicliques(g: &BipartiteGraph, limits: &OracleLimits) -> Result<Vec<Biclique>, Error> {
    check_side(g, limits)?;
    let swap = g.n_v() < g.n_u();
    let (n_small, n_large) = if swap { (g.n_v(), g.n_u()) } else { (g.n_u(), g.n_v()) };
    let nb_small = |x: u32| if swap { g.neighbors_v(x).to_vec() } else { g.neighbors_u(x).to_vec() };
    let nb_large = |y: u32| if swap { g.neighbors_u(y).to_vec() } else { g.neighbors_v(y).to_vec() };

    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n_small) {
        let s: Vec<u32> = (0..n_small as u32).filter(|&i| mask >> i & 1 == 1).collect();
        let t = common(nb_small, &s, n_large);
        if t.is_empty() {
            continue;
        }
        let closure = common(nb_large, &t, n_small);
        if closure != s {
            continue;
        }
        out.push(if swap { Biclique::new(t, s) } else { Biclique::new(s, t) });
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Communities of the filtered maximal bicliques, from explicit adjacency
/// and breadth-first search.
pub fn oracle_bcpc(g: &BipartiteGraph, alpha: usize, beta: usize, limits: &OracleLimits) -> Result<Vec<Vec<Biclique>>, Error> {
    let filtered: Vec<Biclique> = oracle_maximal_bicliques(g, limits)?
        .into_iter()
        .filter(|b| b.x.len() >= alpha && b.y.len() >= beta)
        .collect();
    let n = filtered.len();
    if (n as u64).saturating_mul(n as u64) > limits.max_pairs {
        return Err(Error::OracleLimit(format!("{n} filtered bicliques exceed the pair limit")));
    }
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(&filtered[i], &filtered[j], alpha, beta) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut seen = vec![false; n];
    let mut groups = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut group = vec![filtered[s].clone()];
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    group.push(filtered[y].clone());
                    queue.push_back(y);
                }
            }
        }
        groups.push(group);
    }
    Ok(canonical_partition(groups))
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    r
}

fn combinations(n: usize, k: usize) -> Vec<Vec<u32>> {
    fn rec(n: u32, k: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of complete (α-subset of U, β-subset of V) pairs.
pub fn oracle_count_ab(g: &BipartiteGraph, alpha: usize, beta: usize, limits: &OracleLimits) -> Result<u64, Error> {
    check_side(g, limits)?;
    let work = binomial(g.n_u(), alpha).saturating_mul(binomial(g.n_v(), beta));
    if work > limits.max_pairs {
        return Err(Error::OracleLimit(format!("{work} subset pairs exceed the pair limit")));
    }
    let xs = combinations(g.n_u(), alpha);
    let ys = combinations(g.n_v(), beta);
    let mut count = 0;
    for x in &xs {
        for y in &ys {
            if x.iter().all(|&u| y.iter().all(|&v| g.has_edge(u, v))) {
                count += 1;
            }
        }
    }
    Ok(count)
}
