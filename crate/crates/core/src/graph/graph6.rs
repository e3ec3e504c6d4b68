//! graph6 encoding (McKay), without the optional `>>graph6<<` header.
//!
//! The upper triangle of the adjacency matrix is written column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed big-endian into 6-bit
//! groups, each offset by 63. The vertex count prefix uses one byte for
//! `n ≤ 62`; the long forms are decoded only far enough to report the order.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + nbits.div_ceil(6));
    out.push(BIAS + n as u8);

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let (n, header_len) = parse_order(bytes)?;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }

    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < expected {
        return Err(Error::Graph6Truncated {
            expected,
            found: data.len(),
        });
    }
    if data.len() > expected {
        return Err(Error::Graph6Trailing(data.len() - expected));
    }

    let mut rows = [0u32; MAX_ORDER];
    let mut pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for (offset, &byte) in data.iter().enumerate() {
        if !(BIAS..=BIAS + 63).contains(&byte) {
            return Err(Error::Graph6Byte {
                byte,
                offset: header_len + offset,
            });
        }
        let six = byte - BIAS;
        for shift in (0..6).rev() {
            let bit = six >> shift & 1;
            match pairs.next() {
                Some((i, j)) => {
                    if bit == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                }
                None if bit == 1 => return Err(Error::Graph6Padding),
                None => {}
            }
        }
    }
    Ok(Graph::from_rows(n, &rows))
}

fn parse_order(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes
        .first()
        .ok_or_else(|| Error::Graph6Header("empty input".into()))?;
    let header_byte = |b: u8| {
        if (BIAS..=BIAS + 63).contains(&b) {
            Ok((b - BIAS) as usize)
        } else {
            Err(Error::Graph6Header(format!("invalid order byte {b:#04x}")))
        }
    };
    if first != 126 {
        return Ok((header_byte(first)?, 1));
    }
    // Long forms: `~` + 3 bytes (18 bits) or `~~` + 6 bytes (36 bits).
    let (start, len) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    let field = bytes
        .get(start..start + len)
        .ok_or_else(|| Error::Graph6Header("truncated long-form order".into()))?;
    let mut n = 0usize;
    for &b in field {
        n = (n << 6) | header_byte(b)?;
    }
    Ok((n, start + len))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_is_a_underscore() {
        // n = 2 -> 'A'; single bit x(0,1) = 1 -> 100000b = 32 -> 32 + 63 = '_'
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.has_edge(0, 1));
        assert_eq!(write_graph6(&g), "A_");
        assert_eq!(write_graph6(&Graph::empty(2).unwrap()), "A?");
    }

    #[test]
    fn known_encodings() {
        // K_1, P_3 (0-1-2 has x(0,1)=1, x(0,2)=0, x(1,2)=1 -> 101000b = 40 -> 'g')
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(write_graph6(&p3), "Bg");
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(write_graph6(&k4), "C~");
        assert_eq!(parse_graph6("C~").unwrap(), k4);
        // C_5 in nauty's own output
        let c5 = parse_graph6("Dhc").unwrap();
        assert_eq!(c5.size(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6Header(_))));
        assert!(matches!(parse_graph6(" _"), Err(Error::Graph6Header(_))));
        assert_eq!(parse_graph6("?"), Err(Error::EmptyGraph));
        assert_eq!(
            parse_graph6("C"),
            Err(Error::Graph6Truncated { expected: 1, found: 0 })
        );
        assert_eq!(parse_graph6("A__"), Err(Error::Graph6Trailing(1)));
        assert_eq!(parse_graph6("A`"), Err(Error::Graph6Padding));
        assert!(matches!(parse_graph6("A\u{7f}"), Err(Error::Graph6Byte { .. })));
        assert_eq!(parse_graph6("a"), Err(Error::OrderTooLarge(34)));
        assert_eq!(parse_graph6("~?@A"), Err(Error::OrderTooLarge(66)));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6Header(_))));
    }

    #[test]
    fn order_32_round_trips() {
        let g = Graph::from_edges(32, [(0, 31), (5, 17), (30, 31)]).unwrap();
        let s = write_graph6(&g);
        assert_eq!(s.len(), 1 + (32 * 31 / 2usize).div_ceil(6));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
