//! Graph generators and reference implementations shared by the
//! integration tests. Nothing here calls into the code paths it checks.
#![allow(dead_code, clippy::needless_range_loop)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use vcbound::{Graph, VertexId};

pub const ILLUSTRATION: &str = include_str!("../../fixtures/illustration.el");

pub fn illustration() -> Graph {
    vcbound::parse_edge_list(ILLUSTRATION).unwrap()
}

pub fn ids(g: &Graph, labels: &str) -> Vec<VertexId> {
    labels
        .split_whitespace()
        .map(|l| g.vertex(l).unwrap_or_else(|| panic!("no vertex {l}")))
        .collect()
}

pub fn labels(g: &Graph, set: &[VertexId]) -> Vec<String> {
    set.iter().map(|&v| g.label(v).to_string()).collect()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_index_edges(n, &edges).unwrap()
}

/// Connectivity by union-find, independent of the BFS in the library.
pub fn connected_by_dsu(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut parts = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            parts -= 1;
        }
    }
    parts <= 1
}

/// Every labelled connected graph on `n` vertices.
pub fn all_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        if connected_by_dsu(n, &edges) {
            out.push(Graph::from_index_edges(n, &edges).unwrap());
        }
    }
    out
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `p`. Vertex indices are shuffled so the tree is not
/// aligned with declaration order.
pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (perm[i], perm[j]);
        adj[a][b] = true;
        adj[b][a] = true;
        edges.push((a, b));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] && rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_index_edges(n, &edges).unwrap()
}

/// Sparse variant for large `n`: expected `p * n * (n - 1) / 2` extra edges
/// sampled by pair rejection instead of scanning all pairs.
pub fn random_connected_sparse(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    use std::collections::HashSet;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
        seen.insert((a, b));
        edges.push((a, b));
    }
    let target = (p * (n * (n - 1) / 2) as f64).round() as usize;
    while edges.len() < target.max(n - 1) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if seen.insert(key) {
            edges.push(key);
        }
    }
    Graph::from_index_edges(n, &edges).unwrap()
}

/// Labelled tree on `n >= 2` vertices from a Prüfer sequence.
pub fn tree_from_pruefer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_index_edges(n, &edges).unwrap()
}

/// Calls `f` with every Prüfer sequence of length `n - 2`.
pub fn for_each_pruefer(n: usize, mut f: impl FnMut(&[usize])) {
    let len = n - 2;
    let mut seq = vec![0; len];
    loop {
        f(&seq);
        let mut i = 0;
        loop {
            if i == len {
                return;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Cover number as `n - alpha`, with alpha found by enumerating every
/// vertex subset. Only for `n <= 20`.
pub fn brute_force_beta(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    let mut alpha = 0;
    for set in 0u32..(1 << n) {
        let size = set.count_ones() as usize;
        if size <= alpha {
            continue;
        }
        if (0..n).all(|v| set >> v & 1 == 0 || nbr[v] & set == 0) {
            alpha = size;
        }
    }
    n - alpha
}

pub fn edge_list_cover(g: &Graph, set: &[VertexId]) -> bool {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    g.edges().all(|(u, v)| inside[u] || inside[v])
}

/// Phase 2 written exactly as the step list reads: rescan the whole
/// ordering for the first eligible vertex before every enter, and for the
/// last eligible vertex before every exit, recomputing neighborhoods from
/// scratch. Returns the moves and the final set.
pub fn literal_phase2(
    g: &Graph,
    order: &[VertexId],
    lower: usize,
) -> (Vec<(bool, VertexId)>, Vec<bool>) {
    let n = g.vertex_count();
    let mut in_s = vec![false; n];
    for &v in &order[..lower] {
        in_s[v] = true;
    }
    let outside = |s: &[bool], v: VertexId| g.neighbors(v).iter().filter(|&&u| !s[u]).count();
    let mut moves = Vec::new();
    while let Some(&x) = order.iter().find(|&&x| !in_s[x] && outside(&in_s, x) > 0) {
        in_s[x] = true;
        moves.push((true, x));
    }
    while let Some(&y) = order
        .iter()
        .rev()
        .find(|&&y| in_s[y] && outside(&in_s, y) == 0)
    {
        in_s[y] = false;
        moves.push((false, y));
    }
    (moves, in_s)
}
