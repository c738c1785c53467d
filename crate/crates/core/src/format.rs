//! Text and JSON serialisation of hypergraphs.
//!
//! Text format:
//!
//! ```text
//! hypergraph n=4
//! # one edge per line, 1-based vertex indices
//! 1 2 3
//! 1 2 4
//! ```
//!
//! JSON mirror: `{"n": 4, "edges": [[1,2,3],[1,2,4]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, DEFAULT_MIN_EDGE_SIZE};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Hypergraph> for HypergraphJson {
    fn from(h: &Hypergraph) -> Self {
        HypergraphJson { n: h.n(), edges: h.edge_lists() }
    }
}

pub fn parse_text(input: &str) -> Result<Hypergraph> {
    parse_text_with_min(input, DEFAULT_MIN_EDGE_SIZE)
}

pub fn parse_text_with_min(input: &str, min_edge_size: usize) -> Result<Hypergraph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(order) = n else {
            n = Some(parse_header(line).ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("expected `hypergraph n=<n>`, found `{line}`"),
            })?);
            continue;
        };
        let edge = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse { line: line_no, msg: format!("bad vertex index `{tok}`") })
            })
            .collect::<Result<Vec<_>>>()?;
        if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > order) {
            return Err(Error::VertexOutOfRange { vertex: v, n: order });
        }
        edges.push(edge);
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing `hypergraph n=<n>` header".into() })?;
    Hypergraph::with_min_edge_size(n, edges, min_edge_size)
}

fn parse_header(line: &str) -> Option<usize> {
    let mut parts = line.split_whitespace();
    if parts.next()? != "hypergraph" {
        return None;
    }
    let n = parts.next()?.strip_prefix("n=")?.parse().ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some(n)
}

pub fn to_text(h: &Hypergraph) -> String {
    let mut out = format!("hypergraph n={}\n", h.n());
    for e in h.edge_lists() {
        let line: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_json(input: &str) -> Result<Hypergraph> {
    parse_json_with_min(input, DEFAULT_MIN_EDGE_SIZE)
}

pub fn parse_json_with_min(input: &str, min_edge_size: usize) -> Result<Hypergraph> {
    let raw: HypergraphJson =
        serde_json::from_str(input).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    Hypergraph::with_min_edge_size(raw.n, raw.edges, min_edge_size)
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(&HypergraphJson::from(h)).expect("plain struct serialises")
}

/// Parse either format, choosing JSON when the first non-space byte is `{`.
pub fn parse_any(input: &str, min_edge_size: usize) -> Result<Hypergraph> {
    if input.trim_start().starts_with('{') {
        parse_json_with_min(input, min_edge_size)
    } else {
        parse_text_with_min(input, min_edge_size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip_with_comments() {
        let src = "# triangle\nhypergraph n=3\n1 2 3   # the edge\n\n";
        let h = parse_text(src).unwrap();
        assert_eq!(h.edge_lists(), vec![vec![1, 2, 3]]);
        assert_eq!(parse_text(&to_text(&h)).unwrap(), h);
    }

    #[test]
    fn text_errors() {
        assert!(matches!(parse_text("graph n=3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_text("hypergraph n=3\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_text("hypergraph n=2\n1 2 3\n"), Err(Error::VertexOutOfRange { vertex: 3, n: 2 }));
        assert!(parse_text("").is_err());
    }

    #[test]
    fn json_mirror() {
        let h = parse_json(r#"{"n": 4, "edges": [[1,2,3],[2,1,4]]}"#).unwrap();
        assert_eq!(h.edge_lists(), vec![vec![1, 2, 3], vec![1, 2, 4]]);
        assert_eq!(to_json(&h), r#"{"n":4,"edges":[[1,2,3],[1,2,4]]}"#);
        assert_eq!(parse_any(&to_json(&h), 2).unwrap(), h);
    }
}
