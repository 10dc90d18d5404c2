//! graph6 reader and writer.
//!
//! Layout: the vertex count (one byte `n+63` for n ≤ 62, or `~` followed by
//! three bytes encoding 18 bits for larger n), then the upper triangle of the
//! adjacency matrix column-major, six bits per printable character offset
//! by 63. Pad bits must be zero. Header lines (`>>graph6<<`) are not
//! supported.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

fn bad(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parses one graph6 line (without trailing newline).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(bad(0, "empty line"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(bad(i, format!("invalid byte 0x{b:02x}")));
        }
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(bad(bytes.len(), "truncated long-form vertex count"));
        }
        if bytes[1] == b'~' {
            return Err(bad(1, "vertex counts above 258047 are not supported"));
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };
    if n == 0 {
        return Err(bad(0, "graph has no vertices"));
    }
    if n > MAX_VERTICES {
        return Err(bad(0, format!("vertex count {n} exceeds the cap of {MAX_VERTICES}")));
    }
    let nbits = n * (n - 1) / 2;
    let nchars = nbits.div_ceil(6);
    if bytes.len() - pos != nchars {
        return Err(bad(
            bytes.len().min(pos + nchars),
            format!(
                "expected {nchars} adjacency characters for n={n}, found {}",
                bytes.len() - pos
            ),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut chunk = 0u8;
    let mut bits_left = 0;
    let mut char_pos = pos;
    for col in 1..n {
        for row in 0..col {
            if bits_left == 0 {
                chunk = bytes[pos] - OFFSET;
                char_pos = pos;
                pos += 1;
                bits_left = 6;
            }
            if chunk & 0x20 != 0 {
                g.add_edge(row, col)?;
            }
            chunk <<= 1;
            bits_left -= 1;
        }
    }
    if chunk & 0x3f != 0 {
        return Err(bad(char_pos, "nonzero padding bits"));
    }
    Ok(g)
}

/// Emits the canonical graph6 line for a graph (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + OFFSET);
    } else {
        bytes.push(b'~');
        bytes.push(((n >> 12) as u8 & 0x3f) + OFFSET);
        bytes.push(((n >> 6) as u8 & 0x3f) + OFFSET);
        bytes.push((n as u8 & 0x3f) + OFFSET);
    }
    let mut chunk = 0u8;
    let mut nbits = 0;
    for col in 1..n {
        for row in 0..col {
            chunk = chunk << 1 | u8::from(g.has_edge(row, col));
            nbits += 1;
            if nbits == 6 {
                bytes.push(chunk + OFFSET);
                chunk = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push((chunk << (6 - nbits)) + OFFSET);
    }
    String::from_utf8(bytes).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_k2_and_k3() {
        // Decoded by hand from the format and cross-checked against nauty's
        // geng output.
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.n(), 2);
        assert!(k2.has_edge(0, 1));

        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.n(), 3);
        assert_eq!(k3.edge_count(), 3);
    }

    #[test]
    fn round_trip_is_identity() {
        for line in ["A_", "A?", "Bw", "DQc", "E?~o"] {
            let g = parse_graph6(line).unwrap();
            assert_eq!(emit_graph6(&g), line, "round trip of {line}");
        }
    }

    #[test]
    fn emit_matches_known_lines() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(emit_graph6(&k2), "A_");
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(emit_graph6(&k3), "Bw");
    }

    #[test]
    fn long_form_for_63_and_64_vertices() {
        for n in [63usize, 64] {
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let line = emit_graph6(&g);
            assert_eq!(line.as_bytes()[0], b'~');
            let h = parse_graph6(&line).unwrap();
            assert_eq!(g, h);
        }
    }

    #[test]
    fn malformed_lines_report_offsets() {
        match parse_graph6("") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        // 'A' (n=2) needs exactly one adjacency char.
        assert!(matches!(parse_graph6("A"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("A__"), Err(Error::Graph6 { .. })));
        // Byte below the printable offset.
        match parse_graph6("A\x20") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        // n=2 with a nonzero pad bit in the low positions.
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { .. })));
        // Vertex count above the cap (n=65 -> '~' form).
        let mut big = String::from("~??");
        big.push((65 + 63) as u8 as char);
        assert!(matches!(parse_graph6(&big), Err(Error::Graph6 { .. })));
    }
}
