//! Representations: how a vertex subsequence of a chain induces a graph.
//!
//! Take chosen chain vertices `v_{i_1}, .., v_{i_n}` with
//! `i_1 < .. < i_n`. For each `j >= 2` write the chain letter `s_{i_j}`,
//! preceded by `|` when `i_j > i_{j-1} + 1`. The result is a word over
//! `{0, 1, |}` with exactly `n - 1` letters, no `||` and no trailing `|`.
//! Its blocks are the maximal letter runs; a leading `|` means the first
//! block is empty.
//!
//! A string contains a representation when the blocks can be placed as
//! substrings, in order, with at least one unused letter between
//! consecutive blocks. An empty leading block sits at some position `p >= 1`
//! with length zero, so the next block starts at 2 or later. Placing each
//! block at its leftmost admissible position is exact: any valid placement
//! can be shifted left block by block onto the greedy one.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::canon::canonical_form;
use crate::chains::{power, BitString, Occurrence};
use crate::containment::validate_patterns;
use crate::decider::{chain_length_bound, pattern_bound_n};
use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_MAX_ORDER};
use crate::routes::{ContainmentRoute, DirectEmbedding, RepresentationMatch};

const BAR: u8 = b'|';

/// A word over `0`, `1` and `|`. Ordered as ASCII, so `0 < 1 < |`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Representation(Vec<u8>);

impl Representation {
    fn from_ascii(symbols: Vec<u8>) -> Result<Representation> {
        if let Some(&c) = symbols.iter().find(|&&c| !matches!(c, b'0' | b'1' | BAR)) {
            return Err(Error::InvalidRepresentation(format!(
                "unexpected symbol {:?}",
                c as char
            )));
        }
        if symbols.windows(2).any(|w| w == [BAR, BAR]) {
            return Err(Error::InvalidRepresentation("contains \"||\"".into()));
        }
        if symbols.last() == Some(&BAR) {
            return Err(Error::InvalidRepresentation("ends with \"|\"".into()));
        }
        Ok(Representation(symbols))
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("ASCII")
    }

    /// Number of `0`/`1` symbols; the graph has one more vertex.
    pub fn letter_count(&self) -> usize {
        self.0.iter().filter(|&&c| c != BAR).count()
    }

    pub fn vertex_count(&self) -> usize {
        self.letter_count() + 1
    }

    /// Letter blocks in order, including an empty first block when the
    /// word starts with `|`. The empty representation has no blocks.
    pub fn blocks(&self) -> Vec<BitString> {
        if self.0.is_empty() {
            return Vec::new();
        }
        self.0
            .split(|&c| c == BAR)
            .map(|chunk| BitString::from_letters(chunk.iter().map(|c| c - b'0').collect()))
            .collect()
    }

    /// Leftmost placement of every block, or `None` if `s` does not contain
    /// this representation.
    pub fn place_in(&self, s: &BitString) -> Option<Vec<Occurrence>> {
        let mut placed = Vec::new();
        let mut next = 1;
        for block in self.blocks() {
            let position = if block.is_empty() {
                1
            } else {
                leftmost_from(s.letters(), block.letters(), next)?
            };
            next = position + block.len() + 1;
            placed.push(Occurrence {
                substring: block,
                position,
            });
        }
        Some(placed)
    }
}

/// Leftmost 1-based start `>= from` of `needle` in `hay`.
fn leftmost_from(hay: &[u8], needle: &[u8], from: usize) -> Option<usize> {
    if needle.len() > hay.len() || from + needle.len() > hay.len() + 1 {
        return None;
    }
    (from..=hay.len() + 1 - needle.len()).find(|&p| &hay[p - 1..p - 1 + needle.len()] == needle)
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.as_str())
    }
}

impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Representation> {
        Representation::from_ascii(s.as_bytes().to_vec())
    }
}

/// Encodes the chain vertices at increasing `positions` (0-based chain
/// indices into the chain of `s`).
pub fn encode_embedding(s: &BitString, positions: &[usize]) -> Result<Representation> {
    if positions.is_empty() {
        return Err(Error::Precondition("an embedding needs at least one vertex".into()));
    }
    if positions.windows(2).any(|w| w[0] >= w[1]) || positions[positions.len() - 1] > s.len() {
        return Err(Error::Precondition(
            "positions must be increasing chain indices".into(),
        ));
    }
    let mut symbols = Vec::new();
    for w in positions.windows(2) {
        if w[1] > w[0] + 1 {
            symbols.push(BAR);
        }
        symbols.push(b'0' + s.letter(w[1]));
    }
    Representation::from_ascii(symbols)
}

pub fn reconstruct_graph(r: &Representation) -> Result<Graph> {
    let mut g = Graph::try_new(r.vertex_count())?;
    let mut vertex = 0;
    let mut after_bar = false;
    for &c in &r.0 {
        if c == BAR {
            after_bar = true;
            continue;
        }
        vertex += 1;
        match (after_bar, c) {
            (false, b'0') => g.add_edge(vertex, vertex - 1),
            (false, _) => (0..vertex.saturating_sub(1)).for_each(|x| g.add_edge(vertex, x)),
            (true, b'0') => {}
            (true, _) => (0..vertex).for_each(|x| g.add_edge(vertex, x)),
        }
        after_bar = false;
    }
    Ok(g)
}

/// Every representation of a graph isomorphic to `g`, in ASCII order.
pub fn enumerate_representations(g: &Graph) -> Result<BTreeSet<Representation>> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition(
            "representations need at least one vertex".into(),
        ));
    }
    let target = canonical_form(g);
    let edges = g.edge_count();
    let letters = n - 1;
    let mut out = BTreeSet::new();
    for letter_mask in 0u64..1 << letters {
        for bar_mask in 0u64..1 << letters {
            let mut symbols = Vec::with_capacity(2 * letters);
            for i in 0..letters {
                if bar_mask >> i & 1 == 1 {
                    symbols.push(BAR);
                }
                symbols.push(b'0' + (letter_mask >> i & 1) as u8);
            }
            let r = Representation(symbols);
            let h = reconstruct_graph(&r)?;
            if h.edge_count() == edges && canonical_form(&h) == target {
                out.insert(r);
            }
        }
    }
    Ok(out)
}

pub fn representation_occurs_in(r: &Representation, s: &BitString) -> bool {
    r.place_in(s).is_some()
}

/// Does the chain of `s` contain `g` as an induced subgraph?
///
/// Uses representation matching when `s` is long relative to `g` (or too
/// long to decode under the order cap) and a direct embedding search
/// otherwise; debug builds run both routes and compare.
pub fn string_contains_graph(g: &Graph, s: &BitString) -> Result<bool> {
    if g.order() == 0 {
        return Err(Error::Precondition(
            "pattern must have at least one vertex".into(),
        ));
    }
    let decodable = s.len() < DEFAULT_MAX_ORDER;
    let prefer_representations = g.order() <= 6 && s.len() >= 4 * g.order();
    let (primary, secondary): (&dyn ContainmentRoute, &dyn ContainmentRoute) =
        if prefer_representations || !decodable {
            (&RepresentationMatch, &DirectEmbedding)
        } else {
            (&DirectEmbedding, &RepresentationMatch)
        };
    let answer = primary.contains(g, s)?;
    if cfg!(debug_assertions) && decodable && g.order() <= 6 {
        debug_assert_eq!(
            answer,
            secondary.contains(g, s)?,
            "containment routes disagree on {s}"
        );
    }
    Ok(answer)
}

/// All representations of every forbidden graph, grouped by pattern, for
/// testing many strings against the same `L`.
#[derive(Debug, Clone)]
pub struct RepresentationIndex {
    by_pattern: Vec<Vec<Representation>>,
}

impl RepresentationIndex {
    pub fn new(patterns: &[Graph]) -> Result<RepresentationIndex> {
        validate_patterns(patterns)?;
        let mut memo: HashMap<_, Vec<Representation>> = HashMap::new();
        let by_pattern = patterns
            .iter()
            .map(|p| {
                let form = canonical_form(p);
                if let Some(reps) = memo.get(&form) {
                    return Ok(reps.clone());
                }
                let reps: Vec<Representation> = enumerate_representations(p)?.into_iter().collect();
                memo.insert(form, reps.clone());
                Ok(reps)
            })
            .collect::<Result<_>>()?;
        Ok(RepresentationIndex { by_pattern })
    }

    /// Least index of a pattern contained in the chain of `s`.
    pub fn first_contained(&self, s: &BitString) -> Option<usize> {
        self.by_pattern
            .iter()
            .position(|reps| reps.iter().any(|r| representation_occurs_in(r, s)))
    }

    pub fn is_free(&self, s: &BitString) -> bool {
        self.first_contained(s).is_none()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Representation> {
        self.by_pattern.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.by_pattern.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Finds a period `S` with every power `S^k` free of `patterns`, starting
/// from a long `L`-free string `t`.
///
/// `t` is cut to `s` sections of `2^(n-2) + n - 2` letters, each followed by
/// one separator letter. Some section misses at least one block of every
/// forbidden representation (otherwise `n` sections sharing one
/// representation would together contain it). Inside that section two
/// windows of `n - 2` letters coincide; the letters from the first window up
/// to the second form `S`, with `|S| <= 2^(n-2)`.
pub fn extract_period(t: &BitString, patterns: &[Graph]) -> Result<BitString> {
    let n = pattern_bound_n(patterns)?;
    let required = chain_length_bound(n)?;
    if (t.len() as u128) < required {
        return Err(Error::Precondition(format!(
            "string has {} letters, at least {required} are needed for n = {n}",
            t.len()
        )));
    }
    let index = RepresentationIndex::new(patterns)?;
    if let Some(i) = index.first_contained(t) {
        return Err(Error::Precondition(format!(
            "the string contains forbidden graph #{i}"
        )));
    }

    let section = (1usize << (n - 2)) + n - 2;
    let sections = section_count(n) as usize;
    let blocks: Vec<Vec<BitString>> = index.iter().map(Representation::blocks).collect();

    let chosen = (0..sections)
        .map(|j| t.substring(j * (section + 1) + 1, section))
        .find(|part| {
            blocks
                .iter()
                .all(|bs| !bs.iter().all(|b| b.is_substring_of(part)))
        })
        .ok_or_else(|| Error::Internal("no section avoids every representation".into()))?;

    let window = n - 2;
    let mut first_seen: HashMap<&[u8], usize> = HashMap::new();
    let mut repeat = None;
    for (a2, w) in chosen.letters().windows(window).enumerate() {
        if let Some(&a1) = first_seen.get(w) {
            repeat = Some((a1, a2));
            break;
        }
        first_seen.insert(w, a2);
    }
    let (a1, a2) =
        repeat.ok_or_else(|| Error::Internal("no repeated window in the chosen section".into()))?;
    let period = chosen.substring(a1 + 1, a2 - a1);

    for k in 1..=2 * n + 2 {
        if !index.is_free(&power(&period, k)) {
            return Err(Error::Internal(format!(
                "extracted period {period} fails at power {k}"
            )));
        }
    }
    Ok(period)
}

/// `(n - 1) * (4^n - 1) / 3 + 1`, the number of sections used above.
pub(crate) fn section_count(n: usize) -> u128 {
    (n as u128 - 1) * ((1u128 << (2 * n)) - 1) / 3 + 1
}
