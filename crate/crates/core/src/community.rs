//! Community results shared by every detector, plus their text and JSON forms.

use serde::Serialize;

use crate::bigraph::BipartiteGraph;
use crate::mbe::{Biclique, MbeTree};
use crate::unionfind::DisjointSets;

/// Run counters. Fields that an algorithm does not compute stay `None` and
/// serialize as `null`.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Stats {
    /// All maximal bicliques found.
    pub n_biclique: usize,
    /// Maximal bicliques passing the size filter.
    pub filtered: usize,
    /// Partial-community count after the subtree merge.
    pub pbcpc: Option<usize>,
    /// Partial-community count after the stop-label merge.
    pub pbcpc_plus: Option<usize>,
    pub bcpc: usize,
    /// Nodes of the `(α,β)`-biclique enumeration tree.
    pub tree_nodes: Option<u64>,
    pub adjacency_tests: u64,
    pub unions: u64,
    pub wall_ms: f64,
    /// Nodes of the maximal-biclique enumeration tree.
    pub mbe_nodes: u64,
    /// Tree nodes visited by the stop-label searches.
    pub search_nodes: Option<u64>,
}

impl Stats {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("stats serialize") + "\n"
    }
}

#[derive(Clone, Debug)]
pub struct CommunityResult {
    pub alpha: usize,
    pub beta: usize,
    /// Biclique IDs (in the enumeration's numbering) that pass the size filter.
    pub filtered_ids: Vec<u32>,
    /// The filtered bicliques, parallel to `filtered_ids`.
    pub bicliques: Vec<Biclique>,
    /// Partition over positions in `filtered_ids`.
    pub assignment: DisjointSets,
    pub stats: Stats,
}

impl CommunityResult {
    /// Restricts `uf` (over all biclique IDs of `tree`) to the filtered IDs.
    pub fn from_union_find(
        tree: &MbeTree,
        alpha: usize,
        beta: usize,
        filtered_ids: Vec<u32>,
        uf: &mut DisjointSets,
        mut stats: Stats,
    ) -> Self {
        let mut assignment = DisjointSets::new(filtered_ids.len());
        let mut first_at_root = vec![u32::MAX; uf.len()];
        for (pos, &id) in filtered_ids.iter().enumerate() {
            let r = uf.find(id as usize);
            if first_at_root[r] == u32::MAX {
                first_at_root[r] = pos as u32;
            } else {
                assignment.union(first_at_root[r] as usize, pos);
            }
        }
        let bicliques = filtered_ids.iter().map(|&id| tree.biclique(id).clone()).collect();
        stats.n_biclique = tree.len();
        stats.filtered = filtered_ids.len();
        stats.bcpc = assignment.count();
        CommunityResult { alpha, beta, filtered_ids, bicliques, assignment, stats }
    }

    pub fn community_count(&self) -> usize {
        self.assignment.count()
    }

    /// Communities as sorted biclique lists, ordered by smallest member.
    /// Independent of enumeration order, so results from different
    /// algorithms compare with `==`.
    pub fn partition(&self) -> Vec<Vec<Biclique>> {
        let mut sets = self.assignment.clone();
        canonical_partition(
            sets.groups()
                .into_iter()
                .map(|grp| grp.into_iter().map(|p| self.bicliques[p].clone()).collect())
                .collect(),
        )
    }

    /// One community per line; members are label strings sorted
    /// lexicographically and joined by `" ; "`; lines are ordered by their
    /// smallest member.
    pub fn to_community_file(&self, g: &BipartiteGraph) -> String {
        let mut sets = self.assignment.clone();
        let mut lines: Vec<Vec<String>> = sets
            .groups()
            .into_iter()
            .map(|grp| {
                let mut members: Vec<String> =
                    grp.into_iter().map(|p| self.bicliques[p].to_label_string(g)).collect();
                members.sort();
                members
            })
            .collect();
        lines.sort();
        let mut out = String::new();
        for members in lines {
            out.push_str(&members.join(" ; "));
            out.push('\n');
        }
        out
    }
}

/// Sorts each group and then the list of groups.
pub fn canonical_partition(mut groups: Vec<Vec<Biclique>>) -> Vec<Vec<Biclique>> {
    for grp in &mut groups {
        grp.sort();
    }
    groups.retain(|grp| !grp.is_empty());
    groups.sort();
    groups
}

/// Number of distinct sets among `ids`.
pub fn count_sets(uf: &mut DisjointSets, ids: &[u32]) -> usize {
    let mut roots: Vec<usize> = ids.iter().map(|&i| uf.find(i as usize)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// Biclique dump: one canonical label string per line, lines sorted.
pub fn biclique_dump(g: &BipartiteGraph, bicliques: &[Biclique]) -> String {
    let mut lines: Vec<String> = bicliques.iter().map(|b| b.to_label_string(g)).collect();
    lines.sort();
    lines.into_iter().map(|l| l + "\n").collect()
}
