//! graph6 reading and writing.
//!
//! Layout: an order prefix (`n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit big-endian groups), then the upper triangle in column order
//! `x(0,1) x(0,2) x(1,2) x(0,3) ...` packed six bits per byte, most
//! significant bit first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_MAX_ORDER};

pub const HEADER: &str = ">>graph6<<";

/// Largest order expressible with the short and three-byte prefixes.
pub const MAX_GRAPH6_ORDER: usize = 258_047;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    parse_graph6_with_limit(line, DEFAULT_MAX_ORDER)
}

pub fn parse_graph6_with_limit(line: &str, max_order: usize) -> Result<Graph> {
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte {b} outside the range 63..=126")));
    }
    let (order, body) = match bytes {
        [] => return Err(err("empty word")),
        [126, 126, ..] => return Err(err("orders above 258047 are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated three-byte order prefix"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n < 63 {
                return Err(err(format!("order {n} must use the one-byte prefix")));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if order > max_order {
        return Err(Error::OrderTooLarge {
            order,
            max: max_order,
        });
    }

    let pairs = order * order.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} adjacency bytes for order {order}, found {}",
            body.len()
        )));
    }

    let mut g = Graph::try_with_limit(order, max_order)?;
    let mut bit = 0usize;
    for v in 1..order {
        for u in 0..v {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(err("non-zero padding bits"));
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let order = g.order();
    if order > MAX_GRAPH6_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_GRAPH6_ORDER,
        });
    }
    let mut out = Vec::new();
    if order <= 62 {
        out.push(order as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((order >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..order {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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

/// Parses a file body: one word per line, `#` comments and blank lines
/// skipped, an optional `>>graph6<<` header tolerated.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#') && t != HEADER
        })
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| e.at_line(i + 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decodes_reference_words() {
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3, Graph::complete(3));
        let p4 = parse_graph6("Ch").unwrap();
        assert_eq!(p4, Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]));
        assert_eq!(parse_graph6("@").unwrap(), Graph::new(1));
        assert_eq!(parse_graph6("?").unwrap(), Graph::new(0));
    }

    #[test]
    fn encodes_reference_words() {
        assert_eq!(write_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(write_graph6(&Graph::path(4)).unwrap(), "Ch");
        assert_eq!(write_graph6(&Graph::new(1)).unwrap(), "@");
    }

    #[test]
    fn header_is_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        // byte outside 63..=126
        assert!(matches!(parse_graph6("B w"), Err(Error::Graph6(_))));
        // trailing garbage
        assert!(matches!(parse_graph6("Bww"), Err(Error::Graph6(_))));
        // missing adjacency byte
        assert!(matches!(parse_graph6("B"), Err(Error::Graph6(_))));
        // truncated long prefix
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6(_))));
        // padding bits set: K3 uses 3 bits, 'x' sets a padding bit
        assert!(matches!(parse_graph6("Bx"), Err(Error::Graph6(_))));
    }

    #[test]
    fn long_prefix_round_trips() {
        let g = Graph::cycle(100);
        let word = write_graph6(&g).unwrap();
        assert!(word.starts_with("~?@c"));
        assert_eq!(parse_graph6(&word).unwrap(), g);
    }

    #[test]
    fn enforces_order_limit() {
        let word = write_graph6(&Graph::new(100)).unwrap();
        assert_eq!(
            parse_graph6_with_limit(&word, 50),
            Err(Error::OrderTooLarge {
                order: 100,
                max: 50
            })
        );
    }

    #[test]
    fn file_parsing_skips_comments() {
        let text = ">>graph6<<\n# a comment\n\nBw\nCh\n";
        let gs = parse_graph6_lines(text).unwrap();
        assert_eq!(gs.len(), 2);
        let bad = parse_graph6_lines("Bw\nB w\n").unwrap_err();
        assert!(matches!(bad, Error::AtLine { line: 2, .. }));
    }

    #[test]
    fn every_graph_up_to_order_6_round_trips() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> =
                (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let mut g = Graph::new(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
            }
        }
    }

    proptest! {
        #[test]
        fn random_graphs_round_trip(n in 0usize..=80, seed in any::<u64>()) {
            let mut g = Graph::new(n);
            let mut state = seed | 1;
            for v in 1..n {
                for u in 0..v {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
            }
            let word = write_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&word).unwrap(), g);
        }
    }
}
