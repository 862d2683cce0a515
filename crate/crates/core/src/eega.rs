//! Enter-exit greedy bounds for the vertex cover number.
//!
//! Phase 1 orders vertices by non-ascending degree and takes the shortest
//! prefix whose degree sum reaches `|E|` as the lower bound `L`: no set of
//! fewer vertices can have a large enough degree sum to cover every edge.
//!
//! Phase 2 starts from that prefix `S`. The enter loop moves the first
//! vertex (in degree order) of `V - S` that still has a neighbor in `V - S`
//! into `S`, until `V - S` is independent and `S` is therefore a cover. The
//! exit loop then moves the last vertex of `S` whose neighbors all lie in
//! `S` back out, until every member of `S` has a neighbor outside, which
//! certifies `S` as a minimal cover. Finally the complement and, for
//! bipartite graphs, the two color classes are considered as smaller covers.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{connected_components, is_connected, two_color, Graph, VertexId};
use crate::oracle::{independent_masked, minimal_cover_masked};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EegaError {
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
}

/// Vertices sorted by non-ascending degree, ties by declaration index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeOrdering {
    pub order: Vec<VertexId>,
    pub degrees: Vec<usize>,
}

impl DegreeOrdering {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

pub fn degree_ordering(g: &Graph) -> DegreeOrdering {
    let mut order: Vec<VertexId> = (0..g.vertex_count()).collect();
    // stable: equal degrees keep declaration order
    order.sort_by_key(|&v| std::cmp::Reverse(g.neighbors(v).len()));
    let degrees = order.iter().map(|&v| g.neighbors(v).len()).collect();
    DegreeOrdering { order, degrees }
}

/// Smallest `L` with `d_1 + ... + d_L >= edges`; 0 when there are no edges.
pub fn phase1_lower_bound(ord: &DegreeOrdering, edges: usize) -> usize {
    if edges == 0 {
        return 0;
    }
    let mut sum = 0;
    for (i, d) in ord.degrees.iter().enumerate() {
        sum += d;
        if sum >= edges {
            return i + 1;
        }
    }
    // Degree sum is 2|E|, so the loop always returns for a matching ordering.
    ord.len()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UpperSource {
    /// The set left by the exit loop.
    Phase2Set,
    /// Its complement, when the phase 2 set was independent and larger.
    ComplementSet,
    /// A color class of a bipartite graph.
    BipartiteSide,
    /// Edgeless input; phase 2 never ran.
    None,
    /// Components of a disconnected input finished with different sources.
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceKind {
    Enter,
    Exit,
    Finalize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    pub kind: TraceKind,
    pub vertex: Option<VertexId>,
    /// `(|S|, |V - S|)` right after the event.
    pub snapshot_sizes: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsResult {
    pub lower: usize,
    pub upper: usize,
    /// Sorted vertex indices; always a minimal vertex cover.
    pub cover: Vec<VertexId>,
    pub upper_source: UpperSource,
    /// One entry per component that ran phase 2, in component order.
    pub component_sources: Vec<UpperSource>,
    pub trace: Option<Vec<TraceEvent>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EegaOptions {
    /// Record enter/exit/finalize events.
    pub trace: bool,
    /// Recount outside degrees and re-check independence after every move,
    /// panicking on any mismatch. Quadratic; meant for tests.
    pub verify: bool,
}

/// The evolving partition `(S, V - S)` with `|N(v) ∩ (V - S)|` maintained
/// for every vertex.
#[derive(Debug, Clone)]
pub struct CoverState {
    in_cover: Vec<bool>,
    outside_degree: Vec<usize>,
    cover_size: usize,
}

impl CoverState {
    pub fn new(g: &Graph, initial: &[VertexId]) -> Self {
        let n = g.vertex_count();
        let mut in_cover = vec![false; n];
        for &v in initial {
            in_cover[v] = true;
        }
        let outside_degree = recount(g, &in_cover);
        let cover_size = in_cover.iter().filter(|&&b| b).count();
        Self {
            in_cover,
            outside_degree,
            cover_size,
        }
    }

    pub fn in_cover(&self, v: VertexId) -> bool {
        self.in_cover[v]
    }

    pub fn outside_degree(&self, v: VertexId) -> usize {
        self.outside_degree[v]
    }

    pub fn cover_size(&self) -> usize {
        self.cover_size
    }

    pub fn membership(&self) -> &[bool] {
        &self.in_cover
    }

    /// Moves `v` from `V - S` into `S`.
    pub fn enter(&mut self, g: &Graph, v: VertexId) {
        debug_assert!(!self.in_cover[v]);
        self.in_cover[v] = true;
        self.cover_size += 1;
        for &u in g.neighbors(v) {
            self.outside_degree[u] -= 1;
        }
    }

    /// Moves `v` from `S` into `V - S`.
    pub fn exit(&mut self, g: &Graph, v: VertexId) {
        debug_assert!(self.in_cover[v]);
        self.in_cover[v] = false;
        self.cover_size -= 1;
        for &u in g.neighbors(v) {
            self.outside_degree[u] += 1;
        }
    }

    pub fn is_consistent(&self, g: &Graph) -> bool {
        self.outside_degree == recount(g, &self.in_cover)
            && self.cover_size == self.in_cover.iter().filter(|&&b| b).count()
    }
}

fn recount(g: &Graph, in_cover: &[bool]) -> Vec<usize> {
    (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().filter(|&&u| !in_cover[u]).count())
        .collect()
}

/// Phase 2 on a connected graph with at least one edge.
pub fn phase2_upper_bound(
    g: &Graph,
    ord: &DegreeOrdering,
    lower: usize,
    opts: EegaOptions,
) -> Result<BoundsResult, EegaError> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Err(EegaError::PreconditionViolation(
            "graph has no edges".into(),
        ));
    }
    if !is_connected(g) {
        return Err(EegaError::PreconditionViolation(
            "graph is not connected".into(),
        ));
    }
    if ord.len() != n {
        return Err(EegaError::PreconditionViolation(format!(
            "ordering has {} vertices, graph has {n}",
            ord.len()
        )));
    }
    if lower > n {
        return Err(EegaError::PreconditionViolation(format!(
            "lower bound {lower} exceeds graph order {n}"
        )));
    }

    let mut trace = opts.trace.then(Vec::new);
    let mut record = |kind, vertex, state: &CoverState| {
        if let Some(t) = trace.as_mut() {
            t.push(TraceEvent {
                kind,
                vertex,
                snapshot_sizes: (state.cover_size(), n - state.cover_size()),
            });
        }
    };
    let check = |state: &CoverState| {
        if opts.verify {
            assert!(state.is_consistent(g), "outside degree drift");
        }
    };

    let mut state = CoverState::new(g, &ord.order[..lower]);
    check(&state);

    // Enter loop. Outside degrees only fall while vertices enter S, so a
    // vertex passed over once is never eligible again and one forward
    // sweep finds every "first eligible" vertex in turn.
    for &x in &ord.order {
        if !state.in_cover(x) && state.outside_degree(x) > 0 {
            state.enter(g, x);
            record(TraceKind::Enter, Some(x), &state);
            check(&state);
        }
    }
    if opts.verify {
        let outside: Vec<bool> = state.membership().iter().map(|&b| !b).collect();
        assert!(
            independent_masked(g, &outside),
            "V - S not independent after enter loop"
        );
    }

    // Exit loop. Outside degrees only rise while vertices leave S, so a
    // member found to have an outside neighbor keeps one and a single
    // backward sweep finds every "last eligible" vertex in turn.
    for &y in ord.order.iter().rev() {
        if state.in_cover(y) && state.outside_degree(y) == 0 {
            state.exit(g, y);
            record(TraceKind::Exit, Some(y), &state);
            check(&state);
            if opts.verify {
                let outside: Vec<bool> = state.membership().iter().map(|&b| !b).collect();
                assert!(
                    independent_masked(g, &outside),
                    "exit of {y} broke independence"
                );
            }
        }
    }

    let in_s = state.membership().to_vec();
    let s_size = state.cover_size();
    let mut upper = s_size;
    let mut cover_mask = in_s.clone();
    let mut source = UpperSource::Phase2Set;

    if independent_masked(g, &in_s) && n - s_size < upper {
        upper = n - s_size;
        cover_mask = in_s.iter().map(|&b| !b).collect();
        source = UpperSource::ComplementSet;
    }
    if let Ok(sides) = two_color(g) {
        for side in [&sides.side_a, &sides.side_b] {
            if side.len() < upper {
                upper = side.len();
                cover_mask = vec![false; n];
                for &v in side {
                    cover_mask[v] = true;
                }
                source = UpperSource::BipartiteSide;
            }
        }
    }
    assert!(
        minimal_cover_masked(g, &cover_mask),
        "phase 2 produced a non-minimal cover"
    );
    let cover: Vec<VertexId> = (0..n).filter(|&v| cover_mask[v]).collect();
    if let Some(t) = trace.as_mut() {
        t.push(TraceEvent {
            kind: TraceKind::Finalize,
            vertex: None,
            snapshot_sizes: (upper, n - upper),
        });
    }
    Ok(BoundsResult {
        lower,
        upper,
        cover,
        upper_source: source,
        component_sources: vec![source],
        trace,
    })
}

/// Runs both phases on every connected component with at least one edge
/// and sums the bounds. Isolated vertices contribute nothing.
pub fn run_eega(g: &Graph, opts: EegaOptions) -> BoundsResult {
    let mut lower = 0;
    let mut upper = 0;
    let mut cover = Vec::new();
    let mut component_sources = Vec::new();
    let mut trace = opts.trace.then(Vec::new);

    for members in connected_components(g).components {
        if members.len() < 2 {
            continue;
        }
        let (sub, to_global) = g
            .induced_subgraph(&members)
            .expect("component members are valid indices");
        let ord = degree_ordering(&sub);
        let l = phase1_lower_bound(&ord, sub.edge_count());
        let part = phase2_upper_bound(&sub, &ord, l, opts)
            .expect("components are connected and have edges");
        lower += part.lower;
        upper += part.upper;
        cover.extend(part.cover.iter().map(|&v| to_global[v]));
        component_sources.push(part.upper_source);
        if let (Some(all), Some(events)) = (trace.as_mut(), part.trace) {
            all.extend(events.into_iter().map(|e| TraceEvent {
                vertex: e.vertex.map(|v| to_global[v]),
                ..e
            }));
        }
    }
    cover.sort_unstable();

    let upper_source = match component_sources.split_first() {
        None => UpperSource::None,
        Some((first, rest)) if rest.iter().all(|s| s == first) => *first,
        Some(_) => UpperSource::Mixed,
    };
    BoundsResult {
        lower,
        upper,
        cover,
        upper_source,
        component_sources,
        trace,
    }
}
