//! Text formats: graph6 (short form), a plain edge-list format, and DOT export.
//!
//! graph6 packs the upper triangle of the adjacency matrix in column-major
//! order, x(0,1) x(0,2) x(1,2) x(0,3) ..., six bits per byte, high bit first,
//! each byte offset by 63. Only the short form (order at most 62) is handled;
//! the long form is rejected explicitly.

use crate::graph::{GraphError, SmallGraph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 long form (order > 62) is not supported")]
    LongFormUnsupported,
    #[error("byte {byte:#04x} at position {pos} outside graph6 range 63..=126")]
    ByteOutOfRange { pos: usize, byte: u8 },
    #[error("graph6 of order {order} must be {expected} bytes, got {got}")]
    WrongLength {
        order: usize,
        expected: usize,
        got: usize,
    },
    #[error("nonzero padding bits at end of graph6 string")]
    NonzeroPadding,
    #[error("order {0} exceeds this build's vertex cap of {MAX_VERTICES}")]
    OrderUnsupported(usize),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Number of bytes in the short-form graph6 encoding of an order-`n` graph.
fn g6_len(n: usize) -> usize {
    1 + (n * n.saturating_sub(1) / 2 + 5) / 6
}

/// Decode a short-form graph6 string.
pub fn parse_graph6(s: &str) -> Result<SmallGraph, FormatError> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    if bytes[0] == 126 {
        return Err(FormatError::LongFormUnsupported);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::ByteOutOfRange { pos, byte: b });
        }
    }
    let n = (bytes[0] - 63) as usize;
    if n > MAX_VERTICES {
        return Err(FormatError::OrderUnsupported(n));
    }
    let expected = g6_len(n);
    if bytes.len() != expected {
        return Err(FormatError::WrongLength {
            order: n,
            expected,
            got: bytes.len(),
        });
    }
    let mut g = SmallGraph::empty(n)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let mut idx = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + idx / 6] - 63;
            let bit = byte >> (5 - idx % 6) & 1;
            if bit == 1 {
                g = g.add_edge(u, v)?;
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    // all bits past the triangle must be zero padding
    for i in nbits..(expected - 1) * 6 {
        let byte = bytes[1 + i / 6] - 63;
        if byte >> (5 - i % 6) & 1 == 1 {
            return Err(FormatError::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Encode as short-form graph6.
pub fn emit_graph6(g: &SmallGraph) -> String {
    let n = g.order();
    let mut out = vec![63 + n as u8];
    let mut acc: u8 = 0;
    let mut nacc = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            nacc += 1;
            if nacc == 6 {
                out.push(63 + acc);
                acc = 0;
                nacc = 0;
            }
        }
    }
    if nacc > 0 {
        out.push(63 + (acc << (6 - nacc)));
    }
    debug_assert_eq!(out.len(), g6_len(n));
    String::from_utf8(out).unwrap()
}

/// Parse the plain text format: a `n m` header line, then `m` lines `u v`.
pub fn parse_edge_list(s: &str) -> Result<SmallGraph, FormatError> {
    let mut lines = s.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(FormatError::EdgeList("no header".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| FormatError::EdgeList(format!("bad header {header:?}")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| FormatError::EdgeList(format!("bad header {header:?}")))?;
    if it.next().is_some() {
        return Err(FormatError::EdgeList(format!("trailing tokens in header {header:?}")));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| FormatError::EdgeList(format!("bad edge line {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| FormatError::EdgeList(format!("bad edge line {line:?}")))?;
        if it.next().is_some() {
            return Err(FormatError::EdgeList(format!("trailing tokens in {line:?}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeList(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(SmallGraph::from_edges(n, &edges)?)
}

pub fn emit_edge_list(g: &SmallGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// DOT export (write-only; there is no DOT parser here).
pub fn to_dot(g: &SmallGraph) -> String {
    let mut out = String::from("graph g {\n");
    let mut isolated: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 0).collect();
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    for v in isolated.drain(..) {
        out.push_str(&format!("  {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SmallGraph;

    // Reference strings cross-checked against an independent graph6 encoder.
    #[test]
    fn graph6_frozen_vectors() {
        let cases: Vec<(SmallGraph, &str)> = vec![
            (SmallGraph::empty(0).unwrap(), "?"),
            (SmallGraph::empty(1).unwrap(), "@"),
            (SmallGraph::complete(2).unwrap(), "A_"),
            (SmallGraph::path(3).unwrap(), "Bg"),
            (SmallGraph::complete_bipartite(2, 3).unwrap(), "D]o"),
            (SmallGraph::cycle(5).unwrap(), "Dhc"),
            (SmallGraph::cycle(6).unwrap(), "EhEG"),
        ];
        for (g, s) in cases {
            assert_eq!(emit_graph6(&g), s);
            assert_eq!(parse_graph6(s).unwrap(), g);
        }
    }

    #[test]
    fn graph6_petersen() {
        let pet = SmallGraph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(emit_graph6(&pet), "IheA@GUAo");
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert_eq!(parse_graph6(""), Err(FormatError::Empty));
        assert_eq!(parse_graph6("~??"), Err(FormatError::LongFormUnsupported));
        assert!(matches!(
            parse_graph6("A!"),
            Err(FormatError::ByteOutOfRange { pos: 1, byte: b'!' })
        ));
        assert!(matches!(
            parse_graph6("A"),
            Err(FormatError::WrongLength { order: 2, expected: 2, got: 1 })
        ));
        assert!(matches!(parse_graph6("A_~"), Err(FormatError::WrongLength { .. })));
        // order 3 uses 3 of 6 bits; set a padding bit: 0b000001 -> 63+1 = '@'+0? 64 = '@'
        assert_eq!(parse_graph6("B@"), Err(FormatError::NonzeroPadding));
        // order 40 is valid graph6 but beyond the 32-vertex build cap
        let forty = char::from(63 + 40).to_string();
        assert!(matches!(parse_graph6(&forty), Err(FormatError::OrderUnsupported(40))));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(text, "5 3\n0 1\n1 2\n3 4\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert!(parse_edge_list("3 1\n0 1\n0 2\n").is_err());
        assert!(parse_edge_list("nope").is_err());
    }

    #[test]
    fn dot_output_contains_all_vertices() {
        let g = SmallGraph::from_edges(4, &[(0, 2)]).unwrap();
        let dot = to_dot(&g);
        assert!(dot.contains("0 -- 2;"));
        assert!(dot.contains("  1;"));
        assert!(dot.contains("  3;"));
    }
}
