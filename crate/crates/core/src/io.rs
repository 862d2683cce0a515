//! Graph readers for the line-oriented edge-list format and DIMACS `edge`
//! files.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! vertices a b c      (optional, must precede every edge line)
//! e a b
//! e b c
//! ```
//!
//! Without a `vertices` line, vertices are declared in order of first
//! appearance.

use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("problem line declares {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("line {line}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl ParseError {
    fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Dimacs,
}

impl InputFormat {
    /// `.dimacs`, `.col` and `.clq` are read as DIMACS, everything else as
    /// an edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("dimacs" | "col" | "clq") => InputFormat::Dimacs,
            _ => InputFormat::EdgeList,
        }
    }
}

pub fn parse(text: &str, format: InputFormat) -> Result<Graph, ParseError> {
    match format {
        InputFormat::EdgeList => parse_edge_list(text),
        InputFormat::Dimacs => parse_dimacs(text),
    }
}

pub fn read_graph(path: &Path, format: Option<InputFormat>) -> Result<Graph, ParseError> {
    let text = std::fs::read_to_string(path)?;
    parse(
        &text,
        format.unwrap_or_else(|| InputFormat::from_path(path)),
    )
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut builder = GraphBuilder::new();
    let mut header_seen = false;
    let mut edges_seen = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tokens = strip_comment(raw).split_whitespace();
        let Some(keyword) = tokens.next() else {
            continue;
        };
        let graph_err = |source| ParseError::Graph { line, source };
        match keyword {
            "vertices" => {
                if header_seen {
                    return Err(ParseError::syntax(line, "repeated `vertices` line"));
                }
                if edges_seen {
                    return Err(ParseError::syntax(
                        line,
                        "`vertices` must precede edge lines",
                    ));
                }
                header_seen = true;
                for name in tokens {
                    builder.add_vertex(name).map_err(graph_err)?;
                }
            }
            "e" => {
                let (Some(u), Some(v), None) = (tokens.next(), tokens.next(), tokens.next()) else {
                    return Err(ParseError::syntax(line, "expected `e <name> <name>`"));
                };
                edges_seen = true;
                if !header_seen {
                    builder.vertex_or_insert(u);
                    builder.vertex_or_insert(v);
                }
                builder.add_edge(u, v).map_err(graph_err)?;
            }
            other => {
                return Err(ParseError::syntax(
                    line,
                    format!("unknown keyword `{other}`"),
                ));
            }
        }
    }
    Ok(builder.finish())
}

/// DIMACS `edge` format: `c` comments, one `p edge N M` line, then `M`
/// lines `e U V` with 1-based vertices. Labels are `"1"..="N"`.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut builder: Option<GraphBuilder> = None;
    let mut declared = (0usize, 0usize);
    let mut found = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.as_slice() {
            [] => continue,
            ["c", ..] => continue,
            ["p", rest @ ..] => {
                if builder.is_some() {
                    return Err(ParseError::syntax(line, "repeated problem line"));
                }
                let ["edge", n, m] = rest else {
                    return Err(ParseError::syntax(line, "expected `p edge N M`"));
                };
                let n = parse_count(n, line)?;
                let m = parse_count(m, line)?;
                let mut b = GraphBuilder::new();
                for v in 1..=n {
                    b.add_vertex(&v.to_string())
                        .map_err(|source| ParseError::Graph { line, source })?;
                }
                builder = Some(b);
                declared = (n, m);
            }
            ["e", u, v] => {
                let Some(b) = builder.as_mut() else {
                    return Err(ParseError::syntax(line, "edge before problem line"));
                };
                let n = declared.0;
                let u = parse_count(u, line)?;
                let v = parse_count(v, line)?;
                for vertex in [u, v] {
                    if vertex == 0 || vertex > n {
                        return Err(ParseError::VertexOutOfRange { line, vertex, n });
                    }
                }
                b.add_edge_by_index(u - 1, v - 1)
                    .map_err(|source| ParseError::Graph { line, source })?;
                found += 1;
            }
            ["e", ..] => return Err(ParseError::syntax(line, "expected `e U V`")),
            [other, ..] => {
                return Err(ParseError::syntax(
                    line,
                    format!("unknown line type `{other}`"),
                ));
            }
        }
    }
    let Some(builder) = builder else {
        return Err(ParseError::syntax(
            text.lines().count().max(1),
            "missing problem line",
        ));
    };
    if found != declared.1 {
        return Err(ParseError::EdgeCountMismatch {
            expected: declared.1,
            found,
        });
    }
    Ok(builder.finish())
}

fn parse_count(token: &str, line: usize) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::syntax(line, format!("`{token}` is not a nonnegative integer")))
}

/// Serializes `g` as an edge list with an explicit `vertices` header, so
/// reading it back preserves declaration order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::from("vertices");
    for label in g.labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", g.label(u), g.label(v)));
    }
    out
}
