//! Edge-list text format and DOT export.
//!
//! ```text
//! # comment
//! n=4
//! 0 1
//! 1 2     # trailing comments are fine
//! role 3 xAB
//! ```
//!
//! The emitted form is canonical: the header, then one edge per line sorted
//! lexicographically with the smaller endpoint first, then role lines in
//! vertex order.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph, Vertex};
use crate::multigraph::{Multigraph, MultigraphError};
use crate::paths::{Pairing, PairingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `n=<count>` header")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    OutOfRange {
        line: usize,
        vertex: Vertex,
        n: usize,
    },
    #[error(transparent)]
    Pairing(#[from] PairingError),
}

/// A graph plus the optional role labels of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnotatedGraph {
    pub graph: SimpleGraph,
    pub roles: Vec<(Vertex, String)>,
}

struct RawEdges {
    n: usize,
    edges: Vec<(usize, Vertex, Vertex)>,
    roles: Vec<(Vertex, String)>,
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn malformed(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        message: message.into(),
    }
}

fn parse_vertex(tok: &str, line: usize) -> Result<Vertex, ParseError> {
    tok.parse()
        .map_err(|_| malformed(line, format!("bad vertex id `{tok}`")))
}

fn parse_raw(text: &str) -> Result<RawEdges, ParseError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut roles = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let Some(count) = n else {
            let rest = body
                .strip_prefix('n')
                .map(str::trim_start)
                .and_then(|r| r.strip_prefix('='))
                .ok_or(ParseError::MissingHeader)?;
            let count: usize = rest
                .trim()
                .parse()
                .map_err(|_| malformed(line, "bad vertex count"))?;
            n = Some(count);
            continue;
        };
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            ["role", v, label] => {
                let v = parse_vertex(v, line)?;
                if v >= count {
                    return Err(ParseError::OutOfRange {
                        line,
                        vertex: v,
                        n: count,
                    });
                }
                roles.push((v, label.to_string()));
            }
            [u, v] => {
                let (u, v) = (parse_vertex(u, line)?, parse_vertex(v, line)?);
                for w in [u, v] {
                    if w >= count {
                        return Err(ParseError::OutOfRange {
                            line,
                            vertex: w,
                            n: count,
                        });
                    }
                }
                edges.push((line, u, v));
            }
            _ => return Err(malformed(line, format!("expected `u v`, got `{body}`"))),
        }
    }
    let n = n.ok_or(ParseError::MissingHeader)?;
    roles.sort();
    Ok(RawEdges { n, edges, roles })
}

/// Parses the edge-list format; role lines are accepted and dropped.
pub fn parse_graph(text: &str) -> Result<SimpleGraph, ParseError> {
    parse_annotated(text).map(|a| a.graph)
}

pub fn parse_annotated(text: &str) -> Result<AnnotatedGraph, ParseError> {
    let raw = parse_raw(text)?;
    let mut seen = std::collections::HashSet::new();
    for &(line, u, v) in &raw.edges {
        if u == v {
            return Err(ParseError::Loop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
    }
    let graph = SimpleGraph::new(raw.n, raw.edges.iter().map(|&(_, u, v)| (u, v))).map_err(
        |e| match e {
            GraphError::VertexOutOfRange { vertex, n } => {
                ParseError::OutOfRange { line: 0, vertex, n }
            }
            other => malformed(0, other.to_string()),
        },
    )?;
    Ok(AnnotatedGraph {
        graph,
        roles: raw.roles,
    })
}

/// Same format, but loops and repeated pairs are kept as separate
/// multiedges, numbered in line order.
pub fn parse_multigraph(text: &str) -> Result<Multigraph, ParseError> {
    let raw = parse_raw(text)?;
    Multigraph::from_pairs(raw.n, raw.edges.iter().map(|&(_, u, v)| (u, v))).map_err(|e| match e {
        MultigraphError::VertexOutOfRange { vertex, n } => {
            ParseError::OutOfRange { line: 0, vertex, n }
        }
        other => malformed(0, other.to_string()),
    })
}

pub fn emit_graph(g: &SimpleGraph) -> String {
    let mut out = format!("n={}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn emit_annotated(g: &SimpleGraph, roles: &[(Vertex, String)]) -> String {
    let mut out = emit_graph(g);
    let mut roles = roles.to_vec();
    roles.sort();
    for (v, label) in roles {
        writeln!(out, "role {v} {label}").unwrap();
    }
    out
}

pub fn emit_multigraph(mg: &Multigraph) -> String {
    let mut out = format!("n={}\n", mg.n());
    for e in mg.multiedges() {
        writeln!(out, "{} {}", e.u, e.v).unwrap();
    }
    out
}

pub fn emit_dot(g: &SimpleGraph) -> String {
    emit_dot_labeled(g, &[])
}

pub fn emit_dot_labeled(g: &SimpleGraph, roles: &[(Vertex, String)]) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        match roles.iter().find(|(w, _)| *w == v) {
            Some((_, label)) => writeln!(out, "  {v} [label=\"{label}\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Pairs file: one `u v` per line, `#` comments allowed.
pub fn parse_pairs(text: &str) -> Result<Pairing, ParseError> {
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = strip_comment(raw);
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            [u, v] => pairs.push((parse_vertex(u, line)?, parse_vertex(v, line)?)),
            _ => return Err(malformed(line, format!("expected `u v`, got `{body}`"))),
        }
    }
    Ok(Pairing::new(pairs)?)
}

pub fn emit_pairs(p: &Pairing) -> String {
    let mut out = String::new();
    for (u, v) in p.pairs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
