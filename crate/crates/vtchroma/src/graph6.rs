//! graph6 text format.
//!
//! Size prefix: one byte `n+63` for n <= 62, or `~` followed by three bytes
//! encoding n in 18 bits (each 6-bit group offset by 63). Body: the upper
//! triangle read column by column (x01, x02, x12, x03, ...), packed into
//! 6-bit groups most-significant-bit first, each byte offset by 63, zero
//! padded. Parsing is strict: trailing bytes or nonzero padding are rejected,
//! so every accepted string round-trips byte for byte.

use crate::graph::Graph;
use crate::{Error, Result, MAX_VERTICES};

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

/// Parses a single graph6 string.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty string"));
    }
    let (n, mut pos) = parse_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded { requested: n });
    }
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() - pos < byte_count {
        return Err(malformed(format!(
            "truncated bit stream: need {byte_count} body bytes, found {}",
            bytes.len() - pos
        )));
    }
    if bytes.len() - pos > byte_count {
        return Err(malformed("trailing bytes after adjacency bits"));
    }

    for i in 0..byte_count {
        let b = bytes[pos + i];
        if !(63..=126).contains(&b) {
            return Err(malformed(format!("byte {b:#04x} outside graph6 range")));
        }
    }
    let mut edges = Vec::new();
    let mut bit_idx = 0usize;
    for col in 1..n {
        for row in 0..col {
            let group = bytes[pos + bit_idx / 6] - 63;
            if (group >> (5 - bit_idx % 6)) & 1 == 1 {
                edges.push((row, col));
            }
            bit_idx += 1;
        }
    }
    if byte_count > 0 {
        let last = bytes[pos + byte_count - 1] - 63;
        let pad_bits = byte_count * 6 - bit_count;
        if pad_bits > 0 && last & ((1 << pad_bits) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    pos += byte_count;
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edges(n, &edges)
}

fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes[0] {
        126 => {
            if bytes.len() >= 2 && bytes[1] == 126 {
                // 8-byte form encodes n > 258047, far over capacity
                return Err(Error::CapacityExceeded { requested: 258048 });
            }
            if bytes.len() < 4 {
                return Err(malformed("truncated extended size"));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                if !(63..=126).contains(&b) {
                    return Err(malformed(format!("size byte {b:#04x} outside graph6 range")));
                }
                n = n << 6 | (b - 63) as usize;
            }
            Ok((n, 4))
        }
        b @ 63..=125 => Ok(((b - 63) as usize, 1)),
        b => Err(malformed(format!("size byte {b:#04x} outside graph6 range"))),
    }
}

/// Encodes a graph as a graph6 string (short size form for n <= 62, extended
/// form above).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut group = 0u8;
    let mut bits_in_group = 0;
    for col in 1..n {
        for row in 0..col {
            group <<= 1;
            if g.has_edge(row, col) {
                group |= 1;
            }
            bits_in_group += 1;
            if bits_in_group == 6 {
                out.push(group + 63);
                group = 0;
                bits_in_group = 0;
            }
        }
    }
    if bits_in_group > 0 {
        group <<= 6 - bits_in_group;
        out.push(group + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn k1_is_at_sign() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(write_graph6(&g), "@");
    }

    #[test]
    fn k2_encoding_forced_by_format() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(write_graph6(&k2), "A_");
        assert_eq!(parse_graph6("A_").unwrap(), k2);
    }

    #[test]
    fn known_encodings() {
        let c5 = Graph::cycle(5).unwrap();
        let s = write_graph6(&c5);
        assert_eq!(parse_graph6(&s).unwrap(), c5);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(write_graph6(&k4), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_graph6(""), Err(Error::MalformedGraph6(_))));
        // K_4 body with a bit chopped off
        assert!(matches!(parse_graph6("C"), Err(Error::MalformedGraph6(_))));
        // trailing garbage
        assert!(matches!(parse_graph6("C~~"), Err(Error::MalformedGraph6(_))));
        // byte below offset range in body
        assert!(matches!(parse_graph6("C:"), Err(Error::MalformedGraph6(_))));
        // nonzero padding: K_2 has 1 bit + 5 pad bits; '~' = 63+63 sets them all
        assert!(matches!(parse_graph6("A~"), Err(Error::MalformedGraph6(_))));
    }

    #[test]
    fn extended_size_round_trip() {
        let g = Graph::cycle(70).unwrap();
        let s = write_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_over_capacity() {
        // extended header for n = 200
        let s = format!(
            "~{}{}{}",
            (63u8) as char,
            (63 + ((200 >> 6) & 0x3f)) as u8 as char,
            (63 + (200 & 0x3f)) as u8 as char
        );
        assert!(matches!(parse_graph6(&s), Err(Error::CapacityExceeded { .. })));
    }
}
