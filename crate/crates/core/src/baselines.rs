//! Classical bound procedures used for side-by-side comparison: a greedy
//! maximal matching, a greedy clique partition and the degree ceiling bound.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eega::degree_ordering;
use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaselineError {
    #[error("{edges} edges but maximum degree 0")]
    ZeroMaxDegreeWithEdges { edges: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingBounds {
    pub matching: Vec<(VertexId, VertexId)>,
    pub lower: usize,
    pub upper: usize,
    /// Both endpoints of every matched edge, sorted.
    pub cover: Vec<VertexId>,
}

/// Greedy maximal matching over edges in lexicographic index order.
pub fn matching_bounds(g: &Graph) -> MatchingBounds {
    let mut matched = vec![false; g.vertex_count()];
    let mut matching = Vec::new();
    for (u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            matching.push((u, v));
        }
    }
    let cover: Vec<_> = (0..g.vertex_count()).filter(|&v| matched[v]).collect();
    MatchingBounds {
        lower: matching.len(),
        upper: 2 * matching.len(),
        matching,
        cover,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePartitionBounds {
    pub cliques: Vec<Vec<VertexId>>,
    /// `n - k` for `k` cliques.
    pub lower: usize,
    /// Union of the cliques with at least two vertices, sorted.
    pub cover: Vec<VertexId>,
}

/// Greedy clique partition. Each clique is seeded with the first unassigned
/// vertex in degree order and grown by scanning the remaining unassigned
/// vertices in the same order, keeping those adjacent to every member.
pub fn clique_partition_bounds(g: &Graph) -> CliquePartitionBounds {
    let order = degree_ordering(g).order;
    let mut assigned = vec![false; g.vertex_count()];
    let mut cliques = Vec::new();
    for (pos, &seed) in order.iter().enumerate() {
        if assigned[seed] {
            continue;
        }
        assigned[seed] = true;
        let mut clique = vec![seed];
        for &v in &order[pos + 1..] {
            if !assigned[v] && clique.iter().all(|&c| g.has_edge(c, v)) {
                assigned[v] = true;
                clique.push(v);
            }
        }
        cliques.push(clique);
    }
    let mut cover: Vec<_> = cliques
        .iter()
        .filter(|c| c.len() >= 2)
        .flatten()
        .copied()
        .collect();
    cover.sort_unstable();
    CliquePartitionBounds {
        lower: g.vertex_count() - cliques.len(),
        cliques,
        cover,
    }
}

/// `ceil(m / max_degree)`, or 0 for an edgeless graph.
pub fn ceiling_lower_bound(edges: usize, max_degree: usize) -> Result<usize, BaselineError> {
    match (edges, max_degree) {
        (0, _) => Ok(0),
        (m, 0) => Err(BaselineError::ZeroMaxDegreeWithEdges { edges: m }),
        (m, d) => Ok(m.div_ceil(d)),
    }
}
