//! Cover and independence predicates, plus an exact vertex cover number for
//! small graphs. Everything here is ground truth for the bound algorithms.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::baselines::ceiling_lower_bound;
use crate::graph::{Graph, GraphError, VertexId};

/// Largest order `exact_beta` accepts unless told otherwise.
pub const DEFAULT_SIZE_LIMIT: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph of order {n} exceeds the exact search limit {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// True iff no edge has both ends in `set`.
pub fn is_independent(g: &Graph, set: &[VertexId]) -> Result<bool, GraphError> {
    let mask = g.mask(set)?;
    Ok(independent_masked(g, &mask))
}

pub(crate) fn independent_masked(g: &Graph, mask: &[bool]) -> bool {
    (0..g.vertex_count()).all(|v| !mask[v] || g.restricted_degree_masked(v, mask) == 0)
}

/// True iff every edge has an end in `set`, decided by checking that the
/// complement is independent.
pub fn is_vertex_cover(g: &Graph, set: &[VertexId]) -> Result<bool, GraphError> {
    let mask = g.mask(set)?;
    Ok(cover_masked(g, &mask))
}

pub(crate) fn cover_masked(g: &Graph, mask: &[bool]) -> bool {
    let complement: Vec<bool> = mask.iter().map(|&b| !b).collect();
    let by_complement = independent_masked(g, &complement);
    debug_assert_eq!(
        by_complement,
        g.edges().all(|(u, v)| mask[u] || mask[v]),
        "cover/independence duality"
    );
    by_complement
}

/// True iff `set` is a cover in which every member has a neighbor outside it.
pub fn is_minimal_cover(g: &Graph, set: &[VertexId]) -> Result<bool, GraphError> {
    let mask = g.mask(set)?;
    Ok(minimal_cover_masked(g, &mask))
}

pub(crate) fn minimal_cover_masked(g: &Graph, mask: &[bool]) -> bool {
    cover_masked(g, mask)
        && (0..g.vertex_count())
            .filter(|&v| mask[v])
            .all(|v| g.neighbors(v).iter().any(|&u| !mask[u]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactResult {
    pub beta: usize,
    /// Lexicographically smallest (by index) cover of size `beta`.
    pub optimal_cover: Vec<VertexId>,
    /// Search nodes visited.
    pub explored: u64,
}

/// Exact vertex cover number by size-ascending search.
///
/// For each size `k`, starting at the degree ceiling bound, an include-first
/// depth-first search over vertices in index order looks for a cover of at
/// most `k` vertices. Excluding a vertex forces all of its neighbors in, and
/// a branch is cut as soon as the forced vertices exceed the remaining
/// budget. The first size that succeeds is the cover number, and the first
/// cover found is the lexicographically smallest one.
pub fn exact_beta(g: &Graph, size_limit: usize) -> Result<ExactResult, OracleError> {
    let n = g.vertex_count();
    if n > size_limit {
        return Err(OracleError::TooLarge {
            n,
            limit: size_limit,
        });
    }
    let floor = ceiling_lower_bound(g.edge_count(), g.max_degree())
        .expect("a valid graph with edges has a positive max degree");
    let mut search = Search {
        g,
        state: vec![Decision::Open; n],
        forced: vec![0; n],
        forced_open: 0,
        explored: 0,
    };
    for k in floor..=n {
        if search.run(0, k) {
            let optimal_cover: Vec<_> = (0..n)
                .filter(|&v| search.state[v] == Decision::In)
                .collect();
            debug_assert_eq!(optimal_cover.len(), k);
            return Ok(ExactResult {
                beta: k,
                optimal_cover,
                explored: search.explored,
            });
        }
    }
    unreachable!("the whole vertex set is always a cover")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Decision {
    Open,
    In,
    Out,
}

struct Search<'a> {
    g: &'a Graph,
    state: Vec<Decision>,
    /// Number of excluded neighbors forcing each vertex into the cover.
    forced: Vec<u32>,
    /// Open vertices with `forced > 0`.
    forced_open: usize,
    explored: u64,
}

impl Search<'_> {
    /// Decides vertices `v..n` with at most `budget` more inclusions. On
    /// success the decisions are left in place.
    fn run(&mut self, v: VertexId, budget: usize) -> bool {
        self.explored += 1;
        if self.forced_open > budget {
            return false;
        }
        if v == self.g.vertex_count() {
            return true;
        }
        let forced = self.forced[v] > 0;
        if budget > 0 {
            self.state[v] = Decision::In;
            if forced {
                self.forced_open -= 1;
            }
            if self.run(v + 1, budget - 1) {
                return true;
            }
            if forced {
                self.forced_open += 1;
            }
            self.state[v] = Decision::Open;
        }
        if forced {
            return false;
        }
        // Out: every neighbor must be in. Earlier neighbors are decided.
        let nbrs = self.g.neighbors(v);
        if nbrs
            .iter()
            .any(|&u| u < v && self.state[u] == Decision::Out)
        {
            return false;
        }
        self.state[v] = Decision::Out;
        for &u in nbrs.iter().filter(|&&u| u > v) {
            if self.forced[u] == 0 {
                self.forced_open += 1;
            }
            self.forced[u] += 1;
        }
        if self.run(v + 1, budget) {
            return true;
        }
        for &u in nbrs.iter().filter(|&&u| u > v) {
            self.forced[u] -= 1;
            if self.forced[u] == 0 {
                self.forced_open -= 1;
            }
        }
        self.state[v] = Decision::Open;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_index_edges(n, &edges).unwrap()
    }

    fn p3() -> Graph {
        Graph::build(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn independence_basics() {
        let g = p3();
        assert!(is_independent(&g, &[]).unwrap());
        assert!(is_independent(&g, &[0, 2]).unwrap());
        assert!(!is_independent(&g, &[0, 1]).unwrap());
        assert!(is_independent(&g, &[5]).is_err());
    }

    #[test]
    fn cover_basics() {
        let g = p3();
        assert!(is_vertex_cover(&g, &[0, 1, 2]).unwrap());
        assert!(!is_vertex_cover(&g, &[0]).unwrap());
        assert!(is_vertex_cover(&g, &[1]).unwrap());
    }

    #[test]
    fn minimal_cover_basics() {
        let g = p3();
        assert!(is_minimal_cover(&g, &[1]).unwrap());
        assert!(is_minimal_cover(&g, &[0, 2]).unwrap());
        assert!(!is_minimal_cover(&g, &[0, 1, 2]).unwrap());
        assert!(!is_minimal_cover(&g, &[0]).unwrap());
    }

    #[test]
    fn exact_small() {
        let tri = cycle(3);
        assert_eq!(exact_beta(&tri, DEFAULT_SIZE_LIMIT).unwrap().beta, 2);
        let c5 = exact_beta(&cycle(5), DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!(c5.beta, 3);
        assert_eq!(c5.optimal_cover, vec![0, 1, 3]);
        let empty = Graph::from_index_edges(4, &[]).unwrap();
        let r = exact_beta(&empty, DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!((r.beta, r.optimal_cover.len()), (0, 0));
    }

    #[test]
    fn exact_too_large() {
        let g = Graph::from_index_edges(27, &[(0, 1)]).unwrap();
        assert_eq!(
            exact_beta(&g, DEFAULT_SIZE_LIMIT),
            Err(OracleError::TooLarge { n: 27, limit: 26 })
        );
        assert!(exact_beta(&g, 27).is_ok());
    }

    #[test]
    fn exact_path_of_26() {
        let edges: Vec<_> = (0..25).map(|i| (i, i + 1)).collect();
        let g = Graph::from_index_edges(26, &edges).unwrap();
        let r = exact_beta(&g, DEFAULT_SIZE_LIMIT).unwrap();
        assert_eq!(r.beta, 13);
        assert!(is_vertex_cover(&g, &r.optimal_cover).unwrap());
    }
}
