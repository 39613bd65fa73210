//! Induced-subgraph embedding search and `L`-freeness.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `map[i]` is the host vertex assigned to pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        let k = pattern.order();
        if self.map.len() != k || self.map.iter().any(|&h| h >= host.order()) {
            return false;
        }
        let mut seen = VertexSet::new(host.order());
        for &h in &self.map {
            if seen.contains(h) {
                return false;
            }
            seen.insert(h);
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| pattern.has_edge(i, j) == host.has_edge(self.map[i], self.map[j]))
        })
    }
}

/// Searches for an induced copy of `pattern` in `host`.
///
/// Pattern vertices are placed in order of decreasing degree (ties by
/// index) and host candidates are tried in increasing index, so the result
/// is the lexicographically least embedding with respect to that placement
/// order.
pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return None;
    }
    if k == 0 {
        return Some(Embedding { map: Vec::new() });
    }

    let mut placement: Vec<usize> = (0..k).collect();
    placement.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));

    let host_degrees: Vec<usize> = (0..n).map(|h| host.degree(h)).collect();
    let host_profiles: Vec<Vec<usize>> = (0..n)
        .map(|h| neighbour_degrees(host.neighbors(h).iter(), &host_degrees))
        .collect();
    let pattern_degrees: Vec<usize> = (0..k).map(|p| pattern.degree(p)).collect();

    let candidates: Vec<VertexSet> = (0..k)
        .map(|p| {
            let deg = pattern_degrees[p];
            let profile = neighbour_degrees(pattern.neighbors(p).iter(), &pattern_degrees);
            VertexSet::from_vertices(
                n,
                (0..n).filter(|&h| {
                    host_degrees[h] >= deg
                        && n - 1 - host_degrees[h] >= k - 1 - deg
                        && profile.iter().zip(&host_profiles[h]).all(|(a, b)| b >= a)
                }),
            )
        })
        .collect();
    if candidates.iter().any(VertexSet::is_empty) {
        return None;
    }

    let mut search = EmbeddingSearch {
        pattern,
        host,
        placement: &placement,
        candidates: &candidates,
        map: vec![usize::MAX; k],
        used: VertexSet::new(n),
    };
    search.extend(0).then(|| Embedding { map: search.map })
}

/// Degrees of the given neighbours, largest first.
fn neighbour_degrees(neighbours: impl Iterator<Item = usize>, degrees: &[usize]) -> Vec<usize> {
    let mut ds: Vec<usize> = neighbours.map(|v| degrees[v]).collect();
    ds.sort_unstable_by(|a, b| b.cmp(a));
    ds
}

struct EmbeddingSearch<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    placement: &'a [usize],
    candidates: &'a [VertexSet],
    map: Vec<usize>,
    used: VertexSet,
}

impl EmbeddingSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.placement.len() {
            return true;
        }
        let p = self.placement[depth];
        let mut options = self.candidates[p].clone();
        options.difference_with(&self.used);
        for &q in &self.placement[..depth] {
            let row = self.host.row(self.map[q]);
            if self.pattern.has_edge(p, q) {
                options.intersect_with_words(row);
            } else {
                options.difference_with_words(row);
            }
        }
        for h in options.iter() {
            self.map[p] = h;
            self.used.insert(h);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(h);
        }
        self.map[p] = usize::MAX;
        false
    }
}

pub fn is_induced_subgraph(pattern: &Graph, host: &Graph) -> bool {
    find_induced_embedding(pattern, host).is_some()
}

/// Rejects 0-vertex forbidden graphs.
pub fn validate_patterns(patterns: &[Graph]) -> Result<()> {
    match patterns.iter().position(|p| p.order() == 0) {
        Some(i) => Err(Error::EmptyPattern(i)),
        None => Ok(()),
    }
}

/// Index of the first pattern that embeds in `g`, if any.
pub fn first_embedded_pattern(g: &Graph, patterns: &[Graph]) -> Result<Option<usize>> {
    validate_patterns(patterns)?;
    Ok(patterns.iter().position(|p| is_induced_subgraph(p, g)))
}

pub fn is_l_free(g: &Graph, patterns: &[Graph]) -> Result<bool> {
    Ok(first_embedded_pattern(g, patterns)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate_family, FamilyKind};

    fn claw() -> Graph {
        Graph::star(3)
    }

    #[test]
    fn p4_in_c5_but_not_conversely() {
        let e = find_induced_embedding(&Graph::path(4), &Graph::cycle(5)).unwrap();
        assert!(e.verify(&Graph::path(4), &Graph::cycle(5)));
        assert!(find_induced_embedding(&Graph::cycle(5), &Graph::path(4)).is_none());
    }

    #[test]
    fn triangle_lands_on_spider_body() {
        let spider = generate_family(FamilyKind::ThinSpider, 3).unwrap();
        let e = find_induced_embedding(&Graph::complete(3), &spider).unwrap();
        // u-block is 3..6
        let mut body = e.map.clone();
        body.sort();
        assert_eq!(body, vec![3, 4, 5]);
    }

    #[test]
    fn l_free_examples() {
        assert_eq!(
            first_embedded_pattern(&Graph::cycle(5), &[Graph::path(4)]).unwrap(),
            Some(0)
        );
        assert!(is_l_free(&Graph::cycle(5), &[]).unwrap());
        for n in 3..=6 {
            let spider = generate_family(FamilyKind::ThinSpider, n).unwrap();
            assert!(is_l_free(&spider, &[claw()]).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn empty_pattern_is_rejected() {
        assert_eq!(
            is_l_free(&Graph::path(3), &[Graph::path(2), Graph::new(0)]),
            Err(Error::EmptyPattern(1))
        );
    }

    #[test]
    fn reports_least_index() {
        let l = [Graph::complete(3), Graph::path(3), Graph::complete(2)];
        assert_eq!(first_embedded_pattern(&Graph::path(5), &l).unwrap(), Some(1));
    }

    #[test]
    fn embedding_respects_non_edges() {
        // C4 is a subgraph of K4 but not an induced one.
        assert!(find_induced_embedding(&Graph::cycle(4), &Graph::complete(4)).is_none());
        assert!(find_induced_embedding(&Graph::new(2), &Graph::path(3)).is_some());
    }
}
