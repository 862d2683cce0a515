//! Assembles bounds from every procedure into one report and renders it as
//! text or JSON. The JSON layout is documented in `docs/report-schema.md`.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::baselines::{ceiling_lower_bound, clique_partition_bounds, matching_bounds};
use crate::eega::{degree_ordering, run_eega, EegaOptions, TraceKind, UpperSource};
use crate::graph::{bipartition, connected_components, Graph, VertexId};
use crate::oracle::{exact_beta, is_minimal_cover, is_vertex_cover, OracleError};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub trace: bool,
    pub baselines: bool,
    /// Run the exact oracle when the graph has at most this many vertices.
    pub exact_limit: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub report_version: u32,
    pub graph: GraphSummary,
    pub eega: EegaSection,
    pub baselines: Option<BaselineSection>,
    pub exact: Option<ExactSection>,
    pub timings: Timings,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub components: usize,
    pub isolated_vertices: usize,
    pub bipartite: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceLine {
    pub kind: TraceKind,
    pub vertex: Option<String>,
    pub cover_size: usize,
    pub outside_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EegaSection {
    pub lower: usize,
    pub upper: usize,
    pub upper_source: UpperSource,
    /// Cover labels in degree order.
    pub cover: Vec<String>,
    pub cover_is_minimal: bool,
    pub ordering: Vec<String>,
    pub trace: Option<Vec<TraceLine>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingSection {
    pub lower: usize,
    pub upper: usize,
    pub matching: Vec<(String, String)>,
    pub cover: Vec<String>,
    pub cover_is_minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueSection {
    pub lower: usize,
    pub cliques: Vec<Vec<String>>,
    pub cover: Vec<String>,
    pub cover_is_minimal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaselineSection {
    pub ceiling_lower_bound: usize,
    pub matching: MatchingSection,
    pub clique_partition: CliqueSection,
    /// EEGA's upper bound is no worse than the matching cover.
    pub eega_upper_le_matching_upper: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSection {
    pub beta: usize,
    pub optimal_cover: Vec<String>,
    pub explored: u64,
}

/// Wall-clock microseconds per stage. Excluded from determinism checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub eega_us: u64,
    pub baselines_us: Option<u64>,
    pub exact_us: Option<u64>,
}

fn micros(d: Duration) -> u64 {
    d.as_micros().try_into().unwrap_or(u64::MAX)
}

fn names(g: &Graph, set: &[VertexId]) -> Vec<String> {
    set.iter().map(|&v| g.label(v).to_string()).collect()
}

/// Builds a report. When the exact oracle was requested but refused, the
/// report is still returned along with the refusal.
pub fn build_report(g: &Graph, opts: ReportOptions) -> (Report, Option<OracleError>) {
    let ordering = degree_ordering(g);
    let position = {
        let mut pos = vec![0; g.vertex_count()];
        for (i, &v) in ordering.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    };
    let in_degree_order = |set: &[VertexId]| {
        let mut s = set.to_vec();
        s.sort_by_key(|&v| position[v]);
        names(g, &s)
    };

    let graph = GraphSummary {
        n: g.vertex_count(),
        m: g.edge_count(),
        max_degree: g.max_degree(),
        components: connected_components(g).len(),
        isolated_vertices: g.isolated_vertices().len(),
        bipartite: bipartition(g).is_some(),
    };

    let start = Instant::now();
    let bounds = run_eega(
        g,
        EegaOptions {
            trace: opts.trace,
            verify: false,
        },
    );
    let mut timings = Timings {
        eega_us: micros(start.elapsed()),
        ..Timings::default()
    };
    let eega = EegaSection {
        lower: bounds.lower,
        upper: bounds.upper,
        upper_source: bounds.upper_source,
        cover: in_degree_order(&bounds.cover),
        cover_is_minimal: is_minimal_cover(g, &bounds.cover).expect("cover indices are valid"),
        ordering: names(g, &ordering.order),
        trace: bounds.trace.map(|events| {
            events
                .into_iter()
                .map(|e| TraceLine {
                    kind: e.kind,
                    vertex: e.vertex.map(|v| g.label(v).to_string()),
                    cover_size: e.snapshot_sizes.0,
                    outside_size: e.snapshot_sizes.1,
                })
                .collect()
        }),
    };

    let baselines = opts.baselines.then(|| {
        let start = Instant::now();
        let mb = matching_bounds(g);
        let cp = clique_partition_bounds(g);
        let ceiling = ceiling_lower_bound(g.edge_count(), g.max_degree())
            .expect("a valid graph with edges has a positive max degree");
        timings.baselines_us = Some(micros(start.elapsed()));
        debug_assert!(is_vertex_cover(g, &mb.cover).unwrap_or(false));
        debug_assert!(is_vertex_cover(g, &cp.cover).unwrap_or(false));
        BaselineSection {
            ceiling_lower_bound: ceiling,
            eega_upper_le_matching_upper: bounds.upper <= mb.upper,
            matching: MatchingSection {
                lower: mb.lower,
                upper: mb.upper,
                matching: mb
                    .matching
                    .iter()
                    .map(|&(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
                    .collect(),
                cover: names(g, &mb.cover),
                cover_is_minimal: is_minimal_cover(g, &mb.cover).unwrap_or(false),
            },
            clique_partition: CliqueSection {
                lower: cp.lower,
                cliques: cp.cliques.iter().map(|c| names(g, c)).collect(),
                cover: names(g, &cp.cover),
                cover_is_minimal: is_minimal_cover(g, &cp.cover).unwrap_or(false),
            },
        }
    });

    let mut refused = None;
    let exact = opts.exact_limit.and_then(|limit| {
        let start = Instant::now();
        match exact_beta(g, limit) {
            Ok(r) => {
                timings.exact_us = Some(micros(start.elapsed()));
                assert!(
                    bounds.lower <= r.beta && r.beta <= bounds.upper,
                    "bounds do not bracket the exact cover number"
                );
                Some(ExactSection {
                    beta: r.beta,
                    optimal_cover: names(g, &r.optimal_cover),
                    explored: r.explored,
                })
            }
            Err(e) => {
                refused = Some(e);
                None
            }
        }
    });

    let report = Report {
        report_version: REPORT_VERSION,
        graph,
        eega,
        baselines,
        exact,
        timings,
    };
    (report, refused)
}

fn source_name(s: UpperSource) -> &'static str {
    match s {
        UpperSource::Phase2Set => "phase2-set",
        UpperSource::ComplementSet => "complement-set",
        UpperSource::BipartiteSide => "bipartite-side",
        UpperSource::None => "none",
        UpperSource::Mixed => "mixed",
    }
}

pub fn emit_report(report: &Report, mode: OutputMode) -> String {
    match mode {
        OutputMode::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputMode::Text => emit_text(report),
    }
}

fn emit_text(r: &Report) -> String {
    let mut lines = Vec::new();
    let gs = &r.graph;
    lines.push(format!(
        "graph: n={} m={} max_degree={} components={} isolated={} bipartite={}",
        gs.n,
        gs.m,
        gs.max_degree,
        gs.components,
        gs.isolated_vertices,
        if gs.bipartite { "yes" } else { "no" }
    ));
    lines.push(format!("ordering: {}", r.eega.ordering.join(" ")));
    if let Some(trace) = &r.eega.trace {
        for t in trace {
            lines.push(match (t.kind, &t.vertex) {
                (TraceKind::Enter, Some(v)) => format!("enter {v}"),
                (TraceKind::Exit, Some(v)) => format!("exit {v}"),
                _ => format!("finalize |S|={}", t.cover_size),
            });
        }
    }
    lines.push(format!(
        "eega: L={} U={} source={} minimal={}",
        r.eega.lower,
        r.eega.upper,
        source_name(r.eega.upper_source),
        r.eega.cover_is_minimal
    ));
    lines.push(format!("cover: {}", r.eega.cover.join(" ")));
    if let Some(b) = &r.baselines {
        lines.push(format!("ceiling: {}", b.ceiling_lower_bound));
        lines.push(format!(
            "matching: {} <= beta(G) <= {} minimal={}",
            b.matching.lower, b.matching.upper, b.matching.cover_is_minimal
        ));
        lines.push(format!(
            "clique-partition: lower={} cliques={} cover={} minimal={}",
            b.clique_partition.lower,
            b.clique_partition.cliques.len(),
            b.clique_partition.cover.len(),
            b.clique_partition.cover_is_minimal
        ));
    }
    if let Some(x) = &r.exact {
        lines.push(format!(
            "exact: beta={} cover={} explored={}",
            x.beta,
            x.optimal_cover.join(" "),
            x.explored
        ));
    }
    lines.push(format!("{} <= beta(G) <= {}", r.eega.lower, r.eega.upper));
    let mut out = lines.join("\n");
    out.push('\n');
    out
}
