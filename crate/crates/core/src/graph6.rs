//! graph6 encoding: order header followed by the upper triangle, column by
//! column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per printable byte
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * (n - 1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let bad = |m: &str| Error::Graph6(format!("{m}: {s:?}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty input")),
        [126, 126, ..] => return Err(bad("orders above 258047 are not supported")),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(bad("truncated order header")),
        [h, rest @ ..] => (*h as usize - 63, rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(bad("body length does not match order"));
    }
    let mut g_adj = vec![0u64; n];
    if n == 0 || n > crate::graph::MAX_ORDER {
        return Err(Error::InvalidOrder(n));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g_adj[i] |= 1u64 << j;
                g_adj[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 && (body[body.len() - 1] - 63) & ((1u8 << (6 - nbits % 6)) - 1) != 0 {
        return Err(bad("nonzero padding bits"));
    }
    Graph::from_adjacency(g_adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_strings() {
        // reference strings produced by nauty's geng/showg
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(encode(&k2), "A_");
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&k4), "C~");
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(encode(&c5), "Dhc");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode(&Graph::empty(3).unwrap()), "B?");
    }

    #[test]
    fn petersen_reference() {
        // Petersen graph as printed in the nauty documentation
        let g = decode("IheA@GUAo").unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert_eq!(encode(&g), "IheA@GUAo");
    }

    #[test]
    fn long_header_for_large_orders() {
        let g = Graph::empty(63).unwrap().add_edge(0, 62).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("C").is_err());
        assert!(decode("C~~").is_err());
        assert!(decode("A`").is_err()); // padding bit set
        assert!(decode("A\u{1}").is_err());
        assert!(decode("?").is_err()); // order zero
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=64, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    state ^= state << 13; state ^= state >> 7; state ^= state << 17;
                    if state % 3 == 0 { edges.push((a, b)); }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let s = encode(&g);
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(decode(&s).unwrap(), g);
        }
    }
}
