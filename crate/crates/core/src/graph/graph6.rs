//! McKay's graph6 format.
//!
//! A line is a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed big-endian into 6-bit groups, each printed as `group + 63`.
//! `N(n)` is one byte `n + 63` for `n <= 62`, `~` plus three bytes for
//! `n <= 258047`, and `~~` plus six bytes beyond that.

use thiserror::Error;

use super::{Edge, Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated size header")]
    TruncatedHeader { offset: usize },
    #[error("graph with {n} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge { n: u64 },
    #[error("byte {offset}: adjacency field truncated, expected {expected} bytes")]
    TruncatedBits { offset: usize, expected: usize },
    #[error("byte {offset}: trailing data after adjacency field")]
    TrailingGarbage { offset: usize },
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(Graph6Error::BadByte { offset, byte: b }),
        None => Err(Graph6Error::TruncatedHeader { offset }),
    }
}

fn read_size(bytes: &[u8]) -> Result<(u64, usize), Graph6Error> {
    if bytes.first() != Some(&126) {
        return Ok((sextet(bytes, 0)?, 1));
    }
    if bytes.get(1) != Some(&126) {
        let mut n = 0;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i)?;
        }
        return Ok((n, 4));
    }
    let mut n = 0;
    for i in 2..8 {
        n = (n << 6) | sextet(bytes, i)?;
    }
    Ok((n, 8))
}

/// Parses one graph6 line. A trailing `\n` or `\r\n` is tolerated; anything
/// else after the adjacency field is an error. Padding bits are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, header) = read_size(bytes)?;
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooLarge { n });
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let body = bits.div_ceil(6);
    let end = header + body;
    for offset in header..end.min(bytes.len()) {
        sextet(bytes, offset)?;
    }
    if bytes.len() < end {
        return Err(Graph6Error::TruncatedBits {
            offset: bytes.len(),
            expected: body,
        });
    }
    if bytes.len() > end {
        return Err(Graph6Error::TrailingGarbage { offset: end });
    }
    let data = &bytes[header..end];
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = u32::from(data[k / 6] - 63);
            if group & (1 << (5 - k % 6)) != 0 {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 bits describe a simple graph"))
}

/// Canonical graph6 encoding (shortest header, zero padding).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            group = (group << 1) | u8::from(row.contains(i));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Direct transcription of the format definition: build the full bit
    /// vector first, then chop it into sextets.
    fn reference_encode(g: &Graph) -> String {
        let n = g.n();
        assert!(n <= 62);
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(g.has_edge(i, j));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | u8::from(b));
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn small_examples() {
        let e5 = parse_graph6("D??").unwrap();
        assert_eq!((e5.n(), e5.edge_count()), (5, 0));
        assert_eq!(reference_encode(&fixtures::complete(3)), "Bw");
        assert_eq!(reference_encode(&fixtures::complete(4)), "C~");
        assert_eq!(parse_graph6("Bw").unwrap(), fixtures::complete(3));
        assert_eq!(parse_graph6("C~").unwrap(), fixtures::complete(4));
        assert_eq!(write_graph6(&fixtures::complete(3)), "Bw");
        assert_eq!(write_graph6(&Graph::empty(5)), "D??");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn writer_matches_reference_on_fixtures() {
        for g in [
            fixtures::k66_minus(),
            fixtures::double_banana(),
            fixtures::octahedron(),
            fixtures::complete_bipartite(5, 5),
            fixtures::petersen(),
        ] {
            assert_eq!(write_graph6(&g), reference_encode(&g));
            assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn petersen_known_encoding() {
        // the string nauty prints for the Petersen graph in its standard labelling
        assert_eq!(write_graph6(&fixtures::petersen()), "IheA@GUAo");
    }

    #[test]
    fn extended_headers() {
        let g = fixtures::cycle(100);
        let s = write_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        // a small graph written with a long header is still accepted
        let long = format!("~??D{}", "");
        assert_eq!(parse_graph6(&long).unwrap_err(), Graph6Error::TruncatedBits {
            offset: 4,
            expected: 2,
        });
        assert_eq!(parse_graph6("~??D??").unwrap(), Graph::empty(5));
        let huge = "~~??????";
        assert_eq!(parse_graph6(huge).unwrap(), Graph::empty(0));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("D?"),
            Err(Graph6Error::TruncatedBits {
                offset: 2,
                expected: 2
            })
        );
        assert_eq!(
            parse_graph6("D??x"),
            Err(Graph6Error::TrailingGarbage { offset: 3 })
        );
        assert_eq!(
            parse_graph6("D? ?"),
            Err(Graph6Error::BadByte {
                offset: 2,
                byte: b' '
            })
        );
        assert_eq!(
            parse_graph6("~?"),
            Err(Graph6Error::TruncatedHeader { offset: 2 })
        );
        assert!(matches!(
            parse_graph6("~~?????~"),
            Err(Graph6Error::TooLarge { .. }) | Err(Graph6Error::TruncatedBits { .. })
        ));
        assert_eq!(parse_graph6("Bw\n").unwrap(), fixtures::complete(3));
    }

    #[test]
    fn padding_bits_are_canonicalised() {
        // K_3 uses 3 of 6 bits; set a padding bit
        let noisy = format!("B{}", (0b111_001 + 63) as u8 as char);
        let g = parse_graph6(&noisy).unwrap();
        assert_eq!(write_graph6(&g), "Bw");
    }

    proptest::proptest! {
        #[test]
        fn round_trip(n in 0usize..40, seed in proptest::prelude::any::<u64>()) {
            let g = crate::enumerate::random_graph(n, 0.4, seed);
            let s = write_graph6(&g);
            proptest::prop_assert_eq!(parse_graph6(&s).unwrap(), g.clone());
            proptest::prop_assert_eq!(write_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
