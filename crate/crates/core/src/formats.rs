//! graph6 and plain edge-list encodings.
//!
//! graph6 follows the format description shipped with nauty: a size prefix
//! (one byte for n <= 62, `~` plus 3 bytes up to 258047, `~~` plus 6 bytes
//! beyond) followed by the upper triangle of the adjacency matrix in column
//! order, packed six bits per printable byte.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn g6_err(offset: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

const LONG_FORM: u8 = 126;
const MAX_LONG: usize = (1 << 36) - 1;

fn sixbit(bytes: &[u8], offset: usize) -> Result<u8, ParseError> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(g6_err(offset, format!("byte 0x{b:02x} outside 63..=126"))),
        None => Err(g6_err(offset, "unexpected end of input")),
    }
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let trimmed = text.trim_end();
    let header = ">>graph6<<";
    let (base, body) = match trimmed.strip_prefix(header) {
        Some(rest) => (header.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(ParseError::Empty);
    }

    let (n, mut pos) = if body[0] != LONG_FORM {
        (sixbit(body, 0).map_err(|e| rebase(e, base))? as usize, 1)
    } else if body.get(1) == Some(&LONG_FORM) {
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | sixbit(body, i).map_err(|e| rebase(e, base))? as usize;
        }
        if n > MAX_LONG {
            return Err(g6_err(base + 2, "vertex count out of range"));
        }
        (n, 8)
    } else {
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sixbit(body, i).map_err(|e| rebase(e, base))? as usize;
        }
        (n, 4)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() - pos != expected {
        return Err(g6_err(
            base + pos,
            format!(
                "expected {expected} data bytes for {n} vertices, found {}",
                body.len() - pos
            ),
        ));
    }

    let mut pairs = Vec::new();
    let mut k = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    while k < bits {
        let chunk = sixbit(body, pos).map_err(|e| rebase(e, base))?;
        for b in (0..6).rev() {
            if k == bits {
                if chunk & ((1 << (b + 1)) - 1) != 0 {
                    return Err(g6_err(base + pos, "non-zero padding bits"));
                }
                break;
            }
            if chunk >> b & 1 == 1 {
                pairs.push((i, j));
            }
            k += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Ok(Graph::new(n, &pairs)?)
}

fn rebase(e: ParseError, base: usize) -> ParseError {
    match e {
        ParseError::Graph6 { offset, reason } => ParseError::Graph6 {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

/// Encodes `g` as graph6 without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(LONG_FORM);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([LONG_FORM, LONG_FORM]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.edge_index(i, j).is_some() as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one `u v` pair per line with 0-based labels; `#` starts a comment.
/// The vertex count is one more than the largest label.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    let mut n = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::EdgeList {
                line,
                reason: format!("expected two vertex labels, found {}", tokens.len()),
            });
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| ParseError::EdgeList {
                line,
                reason: format!("'{tok}' is not a non-negative integer"),
            })?;
        }
        let [u, v] = ends;
        if u == v {
            return Err(ParseError::EdgeList {
                line,
                reason: format!("self-loop at vertex {u}"),
            });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::EdgeList {
                line,
                reason: format!("duplicate edge {u} {v}"),
            });
        }
        n = n.max(u.max(v) + 1);
        pairs.push((u, v));
    }
    Ok(Graph::new(n, &pairs)?)
}

/// One canonical `u v` line per edge.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_all_ones() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(emit_graph6(&g), "C~");
    }

    #[test]
    fn empty_input_rejected() {
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert_eq!(parse_graph6(">>graph6<<\n"), Err(ParseError::Empty));
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn bad_bytes_report_offset() {
        match parse_graph6("C~ ") {
            // trailing space is trimmed, so this parses
            Ok(g) => assert_eq!(g.edge_count(), 6),
            Err(e) => panic!("{e}"),
        }
        match parse_graph6("C\x7f") {
            Err(ParseError::Graph6 { offset: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        // too many data bytes
        assert!(matches!(
            parse_graph6("C~~"),
            Err(ParseError::Graph6 { offset: 1, .. })
        ));
    }

    #[test]
    fn non_canonical_padding_rejected() {
        // n = 2 has one data bit; the low five bits of the chunk are padding.
        assert_eq!(parse_graph6("A_").unwrap().edge_count(), 1);
        assert!(matches!(
            parse_graph6("A`"),
            Err(ParseError::Graph6 { offset: 1, .. })
        ));
    }

    #[test]
    fn long_form_roundtrip() {
        let n = 70;
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::new(n, &pairs).unwrap();
        let s = emit_graph6(&g);
        assert_eq!(s.as_bytes()[0], b'~');
        assert_eq!(parse_graph6(&s).unwrap(), g);
        // truncated long-form header
        assert!(matches!(
            parse_graph6("~?"),
            Err(ParseError::Graph6 { offset: 2, .. })
        ));
    }

    #[test]
    fn edge_list_triangle_and_errors() {
        let g = parse_edge_list("0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);

        let dup = parse_edge_list("0 1\n0 1").unwrap_err();
        assert!(matches!(dup, ParseError::EdgeList { line: 2, .. }), "{dup}");
        let rev = parse_edge_list("0 1\n1 0").unwrap_err();
        assert!(matches!(rev, ParseError::EdgeList { line: 2, .. }));
        let lp = parse_edge_list("# c\n3 3").unwrap_err();
        assert!(matches!(lp, ParseError::EdgeList { line: 2, .. }));
        let tok = parse_edge_list("0 x").unwrap_err();
        assert!(matches!(tok, ParseError::EdgeList { line: 1, .. }));
        let arity = parse_edge_list("0 1 2").unwrap_err();
        assert!(matches!(arity, ParseError::EdgeList { line: 1, .. }));
    }

    #[test]
    fn edge_list_comments_and_blank_lines() {
        let g = parse_edge_list("# header\n\n2 0   # trailing\n 1 2 \n").unwrap();
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
        assert_eq!(emit_edge_list(&g), "0 2\n1 2\n");
    }
}
