//! Lower and upper bounds for the vertex cover number of a graph.
//!
//! The main entry point is [`eega::run_eega`], which returns a degree-prefix
//! lower bound `L`, an upper bound `U` and a minimal vertex cover of size
//! `U`. The [`baselines`] module holds the classical matching and clique
//! partition bounds for comparison, and [`oracle`] provides exact answers
//! and certificate checks for small graphs.

pub mod baselines;
pub mod eega;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod report;

pub use baselines::{
    ceiling_lower_bound, clique_partition_bounds, matching_bounds, BaselineError,
    CliquePartitionBounds, MatchingBounds,
};
pub use eega::{
    degree_ordering, phase1_lower_bound, phase2_upper_bound, run_eega, BoundsResult, CoverState,
    DegreeOrdering, EegaError, EegaOptions, TraceEvent, TraceKind, UpperSource,
};
pub use graph::{
    bipartition, connected_components, is_connected, two_color, Bipartition,
    ComponentDecomposition, Graph, GraphBuilder, GraphError, OddCycle, VertexId,
};
pub use io::{parse_dimacs, parse_edge_list, InputFormat, ParseError};
pub use oracle::{
    exact_beta, is_independent, is_minimal_cover, is_vertex_cover, ExactResult, OracleError,
    DEFAULT_SIZE_LIMIT,
};
pub use report::{build_report, emit_report, OutputMode, Report, ReportOptions};
