//! Plain-text edge lists: a vertex-count line, then one `u v` pair per line.
//! Blank lines and `#` comments are ignored.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeListGraph {
    pub graph: Graph,
    /// Edges that appeared more than once.
    pub duplicates: usize,
}

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        reason: reason.into(),
    }
}

fn parse_int(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| err(line, format!("`{token}` is not a non-negative integer")))
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListGraph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(err(line, "expected the vertex count on its own line"));
                }
                n = Some(parse_int(tokens[0], line)?);
            }
            Some(n) => {
                if tokens.len() != 2 {
                    return Err(err(
                        line,
                        format!("expected `u v`, found {} token(s)", tokens.len()),
                    ));
                }
                let u = parse_int(tokens[0], line)?;
                let v = parse_int(tokens[1], line)?;
                if u >= n || v >= n {
                    return Err(err(line, format!("vertex out of range 0..{n}")));
                }
                if u == v {
                    return Err(err(line, format!("loop at vertex {u}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| err(last_line.max(1), "missing vertex count"))?;
    let (graph, duplicates) = Graph::from_edges(n, edges)?;
    Ok(EdgeListGraph { graph, duplicates })
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
