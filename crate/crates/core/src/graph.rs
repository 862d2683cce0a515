//! Immutable simple undirected graphs and the degree, connectivity and
//! two-coloring machinery the bound algorithms are built on.
//!
//! Vertices are addressed by their declaration index `0..n`. Every tie-break
//! elsewhere in the crate falls back to this index order.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

/// Index of a vertex in declaration order.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),
    #[error("vertex index {index} out of range for graph of order {n}")]
    IndexOutOfRange { index: VertexId, n: usize },
}

/// A simple undirected graph. Construct with [`Graph::build`] or
/// [`GraphBuilder`]; the structure is immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

/// Incremental construction, used by the parsers so errors can be tied to
/// the input line that caused them.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adjacency: Vec<Vec<VertexId>>,
    edge_count: usize,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<VertexId, GraphError> {
        if self.index.contains_key(label) {
            return Err(GraphError::DuplicateLabel(label.to_string()));
        }
        let id = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), id);
        self.adjacency.push(Vec::new());
        Ok(id)
    }

    /// Returns the index of `label`, declaring it first if it is new.
    pub fn vertex_or_insert(&mut self, label: &str) -> VertexId {
        match self.index.get(label) {
            Some(&id) => id,
            None => self.add_vertex(label).expect("label checked absent"),
        }
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        let a = self
            .vertex(u)
            .ok_or_else(|| GraphError::UnknownEndpoint(u.to_string()))?;
        let b = self
            .vertex(v)
            .ok_or_else(|| GraphError::UnknownEndpoint(v.to_string()))?;
        self.add_edge_by_index(a, b)
    }

    pub fn add_edge_by_index(&mut self, a: VertexId, b: VertexId) -> Result<(), GraphError> {
        let n = self.labels.len();
        for idx in [a, b] {
            if idx >= n {
                return Err(GraphError::IndexOutOfRange { index: idx, n });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(self.labels[a].clone()));
        }
        // Linear scan keeps insertion cheap; adjacency is sorted in `finish`.
        if self.adjacency[a].contains(&b) {
            return Err(GraphError::DuplicateEdge(
                self.labels[a].clone(),
                self.labels[b].clone(),
            ));
        }
        self.adjacency[a].push(b);
        self.adjacency[b].push(a);
        self.edge_count += 1;
        Ok(())
    }

    pub fn finish(mut self) -> Graph {
        for nbrs in &mut self.adjacency {
            nbrs.sort_unstable();
        }
        let g = Graph {
            labels: self.labels,
            index: self.index,
            adjacency: self.adjacency,
            edge_count: self.edge_count,
        };
        assert_eq!(
            g.degree_sum(),
            2 * g.edge_count,
            "handshake invariant violated"
        );
        g
    }
}

impl Graph {
    /// Builds a graph from labels (declaration order defines the indices)
    /// and label pairs.
    pub fn build<L, E, A, B>(vertex_labels: L, edges: E) -> Result<Self, GraphError>
    where
        L: IntoIterator,
        L::Item: AsRef<str>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut builder = GraphBuilder::new();
        for label in vertex_labels {
            builder.add_vertex(label.as_ref())?;
        }
        for (u, v) in edges {
            builder.add_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(builder.finish())
    }

    /// Graph on vertices labelled `v0..v{n-1}` from index pairs.
    pub fn from_index_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut builder = GraphBuilder::new();
        for i in 0..n {
            builder.add_vertex(&format!("v{i}"))?;
        }
        for &(a, b) in edges {
            builder.add_edge_by_index(a, b)?;
        }
        Ok(builder.finish())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    /// Sorted neighbor indices. Panics when `v` is out of range.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn check_index(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::IndexOutOfRange {
                index: v,
                n: self.vertex_count(),
            })
        }
    }

    /// Membership mask for `set`, validating every index.
    pub(crate) fn mask(&self, set: &[VertexId]) -> Result<Vec<bool>, GraphError> {
        let mut mask = vec![false; self.vertex_count()];
        for &v in set {
            self.check_index(v)?;
            mask[v] = true;
        }
        Ok(mask)
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_index(v)?;
        Ok(self.adjacency[v].len())
    }

    /// Number of neighbors of `v` inside `set`.
    pub fn restricted_degree(&self, v: VertexId, set: &[VertexId]) -> Result<usize, GraphError> {
        self.check_index(v)?;
        let mask = self.mask(set)?;
        Ok(self.restricted_degree_masked(v, &mask))
    }

    pub(crate) fn restricted_degree_masked(&self, v: VertexId, mask: &[bool]) -> usize {
        self.adjacency[v].iter().filter(|&&u| mask[u]).count()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sum(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        (0..self.vertex_count())
            .filter(|&v| self.adjacency[v].is_empty())
            .collect()
    }

    /// Subgraph induced by `vertices`, keeping their relative order and labels.
    /// Returns the subgraph together with the local-to-global index map.
    pub fn induced_subgraph(
        &self,
        vertices: &[VertexId],
    ) -> Result<(Graph, Vec<VertexId>), GraphError> {
        let mut global: Vec<VertexId> = vertices.to_vec();
        global.sort_unstable();
        global.dedup();
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in global.iter().enumerate() {
            self.check_index(v)?;
            local[v] = i;
        }
        let mut builder = GraphBuilder::new();
        for &v in &global {
            builder.add_vertex(&self.labels[v])?;
        }
        for (i, &v) in global.iter().enumerate() {
            for &u in &self.adjacency[v] {
                if local[u] != usize::MAX && local[u] > i {
                    builder.add_edge_by_index(i, local[u])?;
                }
            }
        }
        Ok((builder.finish(), global))
    }
}

/// Vertex sets of the connected components, ordered by smallest member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub components: Vec<Vec<VertexId>>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

pub fn connected_components(g: &Graph) -> ComponentDecomposition {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut members = Vec::new();
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    ComponentDecomposition { components }
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// A two-coloring. Within each component the lowest-index vertex is on side A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: Vec<VertexId>,
    pub side_b: Vec<VertexId>,
}

/// Witness that no two-coloring exists: a closed walk `cycle[0] - cycle[1] -
/// ... - cycle[k-1] - cycle[0]` over distinct vertices with `k` odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle {
    pub cycle: Vec<VertexId>,
}

/// Breadth-first two-coloring, or an odd cycle when the graph has none.
pub fn two_color(g: &Graph) -> Result<Bipartition, OddCycle> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].expect("queued vertices are colored");
            for &u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!cv);
                        parent[u] = v;
                        depth[u] = depth[v] + 1;
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => {
                        return Err(OddCycle {
                            cycle: cycle_through(v, u, &parent, &depth),
                        })
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let (side_a, side_b): (Vec<_>, Vec<_>) = (0..n).partition(|&v| color[v] == Some(false));
    Ok(Bipartition { side_a, side_b })
}

/// Closes the BFS-tree paths from `a` and `b` to their common ancestor.
fn cycle_through(a: VertexId, b: VertexId, parent: &[usize], depth: &[usize]) -> Vec<VertexId> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    two_color(g).ok()
}
