//! Plain-text graph and tree files, and result rendering.
//!
//! A graph file starts with a `n m` header followed by `m` lines `u v`, one
//! per edge; edge ids follow file order. A tree file lists one `u v` line
//! per tree edge. Blank lines and lines starting with `#` are skipped in
//! both.

use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::{EdgeId, Graph, GraphError, SpanningTree};
use crate::solver::SpannerResult;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {0}: {1}")]
    Syntax(usize, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn meaningful(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers<T: std::str::FromStr>(
    line_no: usize,
    line: &str,
) -> Result<(T, T), ParseError> {
    let mut it = line.split_whitespace();
    let parse = |s: Option<&str>| {
        s.and_then(|s| s.parse().ok()).ok_or_else(|| {
            ParseError::Syntax(line_no, format!("expected two integers, got {line:?}"))
        })
    };
    let a = parse(it.next())?;
    let b = parse(it.next())?;
    if it.next().is_some() {
        return Err(ParseError::Syntax(
            line_no,
            format!("expected two integers, got {line:?}"),
        ));
    }
    Ok((a, b))
}

pub fn parse_graph_file(text: &str) -> Result<Graph, ParseError> {
    let mut lines = meaningful(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| ParseError::Syntax(0, "empty file".into()))?;
    let (n, m): (usize, usize) = two_numbers(line_no, header)?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines.next().ok_or_else(|| {
            ParseError::Syntax(0, format!("expected {m} edge lines"))
        })?;
        edges.push(two_numbers(line_no, line)?);
    }
    if let Some((line_no, line)) = lines.next() {
        return Err(ParseError::Syntax(
            line_no,
            format!("trailing content {line:?}"),
        ));
    }
    Ok(Graph::build(n, &edges)?)
}

/// Resolves each `u v` line to an edge of `g`. Count and acyclicity are
/// checked later by [`SpanningTree::build`].
pub fn parse_tree_file(text: &str, g: &Graph) -> Result<Vec<EdgeId>, ParseError> {
    let mut ids = Vec::new();
    for (line_no, line) in meaningful(text) {
        let (u, v) = two_numbers(line_no, line)?;
        let id = g.edge_between(u, v).ok_or_else(|| {
            ParseError::Syntax(line_no, format!("no edge {u} {v} in the graph"))
        })?;
        ids.push(id);
    }
    Ok(ids)
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn tree_to_text(g: &Graph, tree: &SpanningTree) -> String {
    let mut out = String::new();
    for &e in tree.edge_ids() {
        let (u, v) = g.endpoints(e);
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One line per fact, then the tree edges; parse-friendly and diff-friendly.
pub fn render_result(g: &Graph, r: &SpannerResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("exists {}\n", if r.exists() { "yes" } else { "no" }));
    out.push_str(&format!("t {}\n", r.t));
    if let Some(cert) = &r.certificate {
        out.push_str(&format!("stretch {}\n", cert.t()));
    }
    for (i, b) in r.blocks.iter().enumerate() {
        let solved = match b.t {
            Some(t) => t.to_string(),
            None => "-".into(),
        };
        out.push_str(&format!(
            "block {i} vertices {} edges {} t {solved}\n",
            b.vertex_count, b.edge_count
        ));
    }
    if let Some(tree) = &r.tree {
        out.push_str("tree\n");
        out.push_str(&tree_to_text(g, tree));
    }
    out
}

pub fn result_json(g: &Graph, r: &SpannerResult, elapsed_ms: Option<f64>) -> Value {
    let tree_edges: Option<Vec<[u32; 2]>> = r.tree.as_ref().map(|t| {
        t.edge_ids()
            .iter()
            .map(|&e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect()
    });
    let blocks: Vec<Value> = r
        .blocks
        .iter()
        .map(|b| {
            json!({
                "vertices": b.vertex_count,
                "edges": b.edge_count,
                "t": b.t,
            })
        })
        .collect();
    let mut v = json!({
        "exists": r.exists(),
        "t": r.t,
        "stretch": r.certificate.as_ref().map(|c| c.t()),
        "tree_edges": tree_edges,
        "blocks": blocks,
    });
    if let Some(ms) = elapsed_ms {
        v["elapsed_ms"] = json!(ms);
    }
    v
}
