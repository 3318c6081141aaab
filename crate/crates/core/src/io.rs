//! Edge-list and graph6 text formats.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::graph::Graph;

/// graph6 files here use the single-byte size header only.
pub const GRAPH6_MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            _ => Err(domain(format!("unknown graph format {s:?}"))),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::EdgeList => Ok(emit_edge_list(g)),
        GraphFormat::Graph6 => emit_graph6(g),
    }
}

/// First data line is `n`; each further line is `u v`. `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: first,
        msg: format!("expected a vertex count, found {header:?}"),
    })?;
    let mut g = Graph::empty(n)?;
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => g.add_edge(u, v).map_err(|e| match e {
                Error::VertexOutOfRange { .. } | Error::SelfLoop(_) => Error::Parse {
                    line,
                    msg: e.to_string(),
                },
                other => other,
            })?,
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected two vertex indices, found {l:?}"),
                })
            }
        }
    }
    Ok(g)
}

/// `n` on the first line, then edges `u v` with `u < v` in lexicographic order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: String| Error::Parse { line: 1, msg };
    let (&head, body) = bytes.split_first().ok_or_else(|| bad("empty graph6 string".into()))?;
    if !(63..=126).contains(&head) {
        return Err(bad(format!("graph6 size byte {head} out of range")));
    }
    if head == 126 {
        return Err(Error::Capacity {
            n: GRAPH6_MAX_VERTICES + 1,
            max: GRAPH6_MAX_VERTICES,
        });
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    if body.len() != expect {
        return Err(bad(format!(
            "graph6 body for {n} vertices needs {expect} bytes, found {}",
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(expect * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(bad(format!("graph6 byte {b} out of range")));
        }
        let x = b - 63;
        for k in (0..6).rev() {
            bits.push(x >> k & 1 == 1);
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Upper triangle in column order, six bits per printable byte.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::Capacity {
            n,
            max: GRAPH6_MAX_VERTICES,
        });
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn edge_list_parsing() {
        let g = parse_edge_list("4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g.edges(), cycle(4).unwrap().edges());
        let g = parse_edge_list("# comment\n3   # three\n0 1\n1 0\n\n1 2 # tail\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(matches!(parse_edge_list("2\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("2\n0 5\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("3\n0 1\nx y\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("3\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("99\n"), Err(Error::Capacity { .. })));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn edge_list_emission_is_sorted() {
        let g = parse_edge_list("4\n3 0\n2 3\n1 2\n0 1\n").unwrap();
        assert_eq!(emit_edge_list(&g), "4\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn graph6_known_strings() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&g).unwrap(), "D?{");
        // petgraph's reference: edges a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(emit_graph6(&complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap().edges(), complete(4).unwrap().edges());
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err());
        assert!(matches!(parse_graph6("~?@"), Err(Error::Capacity { .. })));
        assert!(emit_graph6(&path(63).unwrap()).is_err());
    }
}
