//! graph6 encoding.
//!
//! A header encodes `n` (one byte `n + 63` for `n <= 62`, `126` followed by
//! three bytes for `n <= 258047`, or `126 126` followed by six bytes), then the
//! upper triangle of the adjacency matrix in column-major order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, each byte offset by
//! 63 and the last one zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = (1 << 36) - 1;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn decode_header(bytes: &[u8]) -> Result<(usize, usize)> {
    let word = |start: usize, len: usize| -> Result<usize> {
        if bytes.len() < start + len {
            return Err(err(bytes.len(), "truncated size header"));
        }
        Ok(bytes[start..start + len]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63)))
    };
    match bytes.first() {
        None => Err(err(0, "empty input")),
        Some(&126) if bytes.get(1) == Some(&126) => Ok((word(2, 6)?, 8)),
        Some(&126) => Ok((word(1, 3)?, 4)),
        Some(&b) => Ok((usize::from(b - 63), 1)),
    }
}

pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(
            pos,
            format!("byte {:#04x} outside 63..=126", bytes[pos]),
        ));
    }
    let (n, header) = decode_header(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let payload_len = bit_count.div_ceil(6);
    let payload = &bytes[header..];
    if payload.len() < payload_len {
        return Err(err(
            bytes.len(),
            format!(
                "expected {payload_len} payload bytes for n = {n}, found {}",
                payload.len()
            ),
        ));
    }
    if payload.len() > payload_len {
        return Err(err(header + payload_len, "trailing garbage"));
    }
    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[t / 6] - 63;
            if byte >> (5 - t % 6) & 1 == 1 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::new(n, &edges)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push_word = |out: &mut Vec<u8>, value: usize, len: usize| {
        for k in (0..len).rev() {
            out.push((value >> (6 * k) & 63) as u8 + 63);
        }
    };
    if n <= SHORT_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        push_word(&mut out, n, 3);
    } else if n <= LONG_MAX {
        out.extend([126, 126]);
        push_word(&mut out, n, 6);
    } else {
        return Err(Error::Graph6Size(n));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Expected strings cross-checked against networkx's graph6 reader/writer.
    #[test]
    fn known_strings() {
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(emit_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(emit_graph6(&Graph::path(3)).unwrap(), "Bg");
        assert_eq!(emit_graph6(&Graph::cycle(4)).unwrap(), "Cl");
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(
            parse_graph6("Bw?"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("C"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("B w"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(emit_graph6(&Graph::empty(0)).unwrap(), "?");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn medium_header_round_trip() {
        let g = Graph::path(70);
        let s = emit_graph6(&g).unwrap();
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
