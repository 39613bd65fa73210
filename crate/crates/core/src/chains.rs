//! Chains and their encoding as binary strings.
//!
//! A chain `v_0, .., v_k` is a vertex sequence in which each `v_i` with
//! `i >= 2` is adjacent either to `v_{i-1}` alone among its predecessors,
//! or to every predecessor except `v_{i-1}`. Letter `s_i` of its string is
//! `0` in the first case and `1` in the second (for `v_1`, `0` means the
//! edge `v_0 v_1` is present). The empty string is the one-vertex chain.
//!
//! Chains are not a separate type: a chain is a graph together with a
//! vertex order.

use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<u8>);

impl BitString {
    pub fn new() -> BitString {
        BitString(Vec::new())
    }

    /// Panics if a letter is not 0 or 1.
    pub fn from_letters(letters: Vec<u8>) -> BitString {
        assert!(letters.iter().all(|&b| b <= 1), "letters must be 0 or 1");
        BitString(letters)
    }

    /// The `len` low bits of `value`, most significant first.
    pub fn from_bits(value: u64, len: usize) -> BitString {
        BitString((0..len).rev().map(|i| (value >> i & 1) as u8).collect())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    /// `len` letters starting at 1-based position `start`.
    pub fn substring(&self, start: usize, len: usize) -> BitString {
        BitString(self.0[start - 1..start - 1 + len].to_vec())
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        BitString(letters)
    }

    pub fn is_substring_of(&self, host: &BitString) -> bool {
        self.is_empty() || host.0.windows(self.len()).any(|w| w == self.0)
    }

    /// Every occurrence of `self` in `host`, leftmost first.
    pub fn occurrences_in(&self, host: &BitString) -> Vec<Occurrence> {
        if self.len() > host.len() {
            return Vec::new();
        }
        (1..=host.len() + 1 - self.len())
            .filter(|&p| host.0[p - 1..p - 1 + self.len()] == self.0[..])
            .map(|position| Occurrence {
                substring: self.clone(),
                position,
            })
            .collect()
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<BitString> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidLetter(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BitString)
    }
}

/// A substring of some host string starting at a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub substring: BitString,
    pub position: usize,
}

impl Occurrence {
    /// One unused host letter lies strictly between the two occurrences.
    pub fn is_one_disjoint(&self, later: &Occurrence) -> bool {
        self.position + self.substring.len() < later.position
    }
}

/// The graph induced by the chain encoded by `s`, on `|s| + 1` vertices
/// labeled in chain order.
pub fn string_to_graph(s: &BitString) -> Result<Graph> {
    let mut g = Graph::try_new(s.len() + 1)?;
    for i in 1..=s.len() {
        if s.letter(i) == 0 {
            g.add_edge(i, i - 1);
        } else {
            for j in 0..i.saturating_sub(1) {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Reads the string of the chain `order` in `g`.
pub fn chain_to_string(g: &Graph, order: &[usize]) -> Result<BitString> {
    let n = g.order();
    if order.len() != n {
        return Err(Error::NotAnOrdering);
    }
    let mut seen = VertexSet::new(n);
    for &v in order {
        if v >= n || seen.contains(v) {
            return Err(Error::NotAnOrdering);
        }
        seen.insert(v);
    }
    let mut letters = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let to_previous = g.has_edge(order[i], order[i - 1]);
        let earlier = &order[..i - 1];
        let consistent = if to_previous {
            earlier.iter().all(|&x| !g.has_edge(order[i], x))
        } else {
            earlier.iter().all(|&x| g.has_edge(order[i], x))
        };
        if !consistent {
            return Err(Error::NotAChain(i));
        }
        letters.push(u8::from(!to_previous));
    }
    Ok(BitString(letters))
}

/// Flips every letter; the chain of the result induces the complement.
pub fn complement_string(s: &BitString) -> BitString {
    BitString(s.0.iter().map(|&b| 1 - b).collect())
}

/// `k` concatenated copies of `s`.
pub fn power(s: &BitString, k: usize) -> BitString {
    BitString(s.0.repeat(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::primality::is_prime;
    use proptest::prelude::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn all_strings(len: usize) -> impl Iterator<Item = BitString> {
        (0..1u64 << len).map(move |x| BitString::from_bits(x, len))
    }

    #[test]
    fn decoding_examples() {
        assert_eq!(string_to_graph(&bs("0")).unwrap(), Graph::complete(2));
        assert_eq!(string_to_graph(&bs("00")).unwrap(), Graph::path(3));
        assert_eq!(string_to_graph(&BitString::new()).unwrap(), Graph::new(1));
        let a = string_to_graph(&bs("011000")).unwrap();
        let b = string_to_graph(&bs("001000")).unwrap();
        assert!(are_isomorphic(&a, &b));
    }

    #[test]
    fn encoding_examples() {
        assert_eq!(chain_to_string(&Graph::complete(2), &[0, 1]).unwrap(), bs("0"));
        assert_eq!(chain_to_string(&Graph::path(3), &[0, 1, 2]).unwrap(), bs("00"));
        for order in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            assert_eq!(
                chain_to_string(&Graph::complete(3), &order),
                Err(Error::NotAChain(2))
            );
        }
        assert_eq!(
            chain_to_string(&Graph::path(3), &[0, 0, 1]),
            Err(Error::NotAnOrdering)
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_string(&bs("0")), bs("1"));
        assert_eq!(string_to_graph(&bs("1")).unwrap(), Graph::new(2));
        assert_eq!(complement_string(&bs("00")), bs("11"));
        assert_eq!(
            string_to_graph(&bs("11")).unwrap(),
            Graph::from_edges(3, &[(0, 2)])
        );
        assert_eq!(
            string_to_graph(&complement_string(&bs("010101"))).unwrap(),
            string_to_graph(&bs("010101")).unwrap().complement()
        );
    }

    #[test]
    fn power_examples() {
        assert_eq!(power(&bs("01"), 3), bs("010101"));
        assert_eq!(power(&bs("0110"), 0), BitString::new());
        assert_eq!(power(&bs("011"), 2), bs("011011"));
    }

    #[test]
    fn parse_rejects_other_symbols() {
        assert_eq!("01|".parse::<BitString>(), Err(Error::InvalidLetter('|')));
    }

    #[test]
    fn occurrences_and_disjointness() {
        let occ = bs("01").occurrences_in(&bs("010101"));
        assert_eq!(occ.iter().map(|o| o.position).collect::<Vec<_>>(), vec![1, 3, 5]);
        assert!(!occ[0].is_one_disjoint(&occ[1]));
        assert!(occ[0].is_one_disjoint(&occ[2]));
    }

    #[test]
    fn bijection_and_complement_up_to_length_12() {
        for len in 0..=12 {
            let identity: Vec<usize> = (0..=len).collect();
            for s in all_strings(len) {
                let g = string_to_graph(&s).unwrap();
                assert_eq!(chain_to_string(&g, &identity).unwrap(), s);
                assert_eq!(string_to_graph(&complement_string(&s)).unwrap(), g.complement());
            }
        }
    }

    /// Every chain of length 4..=8 has a sub-chain one shorter that induces
    /// a prime graph.
    #[test]
    fn chains_trim_to_prime_subchains() {
        for len in 4..=8usize {
            for s in all_strings(len) {
                let g = string_to_graph(&s).unwrap();
                let found = (0..=len).any(|drop| {
                    let keep: Vec<usize> = (0..=len).filter(|&x| x != drop).collect();
                    let sub = g.induced_subgraph(&keep).unwrap();
                    chain_to_string(&sub, &(0..len).collect::<Vec<_>>()).is_ok() && is_prime(&sub)
                });
                assert!(found, "{s}");
            }
        }
    }

    proptest! {
        #[test]
        fn power_length(letters in proptest::collection::vec(0u8..2, 0..10), k in 0usize..8) {
            let s = BitString::from_letters(letters);
            prop_assert_eq!(power(&s, k).len(), k * s.len());
        }
    }
}
