//! Plain-text edge-list format.
//!
//! ```text
//! # optional comments
//! n m
//! u v        (or "u v w" for weighted graphs)
//! ```
//!
//! Vertices are 0-indexed and the edge count in the header must match the
//! number of edge lines.

use thiserror::Error;

use crate::graph::{Graph, WeightedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed edge line")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: edge weight must be a positive integer")]
    BadWeight { line: usize },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
}

struct RawEdge {
    u: usize,
    v: usize,
    w: Option<u64>,
}

fn parse_lines(text: &str, weighted: bool) -> Result<(usize, Vec<RawEdge>), ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match head.as_slice() {
        [n, m] => match (n.parse::<usize>(), m.parse::<usize>()) {
            (Ok(n), Ok(m)) => (n, m),
            _ => return Err(ParseError::MalformedHeader { line: hline }),
        },
        _ => return Err(ParseError::MalformedHeader { line: hline }),
    };

    let mut seen = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let expected = if weighted { 3 } else { 2 };
        if toks.len() != expected {
            return Err(ParseError::MalformedEdge { line });
        }
        let u: usize = toks[0]
            .parse()
            .map_err(|_| ParseError::MalformedEdge { line })?;
        let v: usize = toks[1]
            .parse()
            .map_err(|_| ParseError::MalformedEdge { line })?;
        let w = if weighted {
            match toks[2].parse::<u64>() {
                Ok(w) if w >= 1 => Some(w),
                _ => return Err(ParseError::BadWeight { line }),
            }
        } else {
            None
        };
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::VertexOutOfRange {
                    line,
                    vertex,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: key.0,
                v: key.1,
            });
        }
        edges.push(RawEdge { u, v, w });
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Ok((n, edges))
}

pub fn read_graph(text: &str) -> Result<Graph, ParseError> {
    let (n, edges) = parse_lines(text, false)?;
    // all structural checks already happened above
    Ok(Graph::new(n, edges.iter().map(|e| (e.u, e.v))).expect("validated edge list"))
}

pub fn read_weighted(text: &str) -> Result<WeightedGraph, ParseError> {
    let (n, edges) = parse_lines(text, true)?;
    Ok(WeightedGraph::new(
        n,
        edges.iter().map(|e| (e.u, e.v, e.w.expect("weighted line"))),
    )
    .expect("validated edge list"))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn write_weighted(wg: &WeightedGraph) -> String {
    let g = wg.graph();
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (&(u, v), w) in g.edges().iter().zip(wg.weights()) {
        out.push_str(&format!("{u} {v} {w}\n"));
    }
    out
}
