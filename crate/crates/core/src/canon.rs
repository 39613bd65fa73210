//! Canonical labeling by colour refinement plus individualization.
//!
//! The search individualizes each vertex of the first non-singleton cell,
//! refines, and recurses until the colouring is discrete. Every leaf gives
//! a relabeling; the one whose upper-triangle bit string is lexicographically
//! greatest wins. Branches on vertices that are twins of an already explored
//! vertex in the same cell are skipped, since swapping twins is an
//! automorphism that fixes everything individualized so far.

use std::fmt;

use crate::graph::Graph;
use crate::graph6::write_graph6;

/// Canonical graph6 word of a graph. Equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let canon = canonical_graph(g);
    CanonicalForm(
        write_graph6(&canon)
            .expect("order within graph6 range")
            .into_bytes(),
    )
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let perm = canonical_labeling(g);
    g.induced_unchecked(&perm)
}

/// `result[i]` is the vertex of `g` placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    if n <= 64 {
        return small::labeling(g);
    }
    general_labeling(g)
}

fn general_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut search = Search {
        g,
        best: None,
    };
    search.descend(vec![0; n]);
    search.best.expect("at least one leaf").1
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut colors: Vec<u32>) {
        let cells = refine(self.g, &mut colors);
        let n = self.g.order();
        if cells == n {
            let mut perm = vec![0; n];
            for (v, &c) in colors.iter().enumerate() {
                perm[c as usize] = v;
            }
            let code = upper_triangle(self.g, &perm);
            if self.best.as_ref().map_or(true, |(b, _)| code > *b) {
                self.best = Some((code, perm));
            }
            return;
        }

        let mut sizes = vec![0usize; cells];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = sizes.iter().position(|&s| s > 1).expect("non-discrete") as u32;
        let members: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();

        let mut explored: Vec<usize> = Vec::new();
        for &v in &members {
            if explored.iter().any(|&t| are_twins(self.g, v, t)) {
                continue;
            }
            let next = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| 2 * c + u32::from(c == target && x != v))
                .collect();
            self.descend(next);
            explored.push(v);
        }
    }
}

/// Open-neighbourhood twins: `N(u) - {v} == N(v) - {u}`.
fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighbors(u);
    let mut nv = g.neighbors(v);
    nu.remove(v);
    nv.remove(u);
    nu == nv
}

/// Refines `colors` to the coarsest equitable colouring that refines it and
/// renumbers the cells `0..k` in an isomorphism-invariant order. Returns `k`.
fn refine(g: &Graph, colors: &mut [u32]) -> usize {
    let n = g.order();
    let mut cells = renumber(colors.iter().map(|&c| vec![c]).collect(), colors);
    loop {
        let signatures: Vec<Vec<u32>> = (0..n)
            .map(|v| {
                let mut sig = vec![0u32; cells + 1];
                sig[0] = colors[v];
                for u in g.neighbors(v).iter() {
                    sig[1 + colors[u] as usize] += 1;
                }
                sig
            })
            .collect();
        let next = renumber(signatures, colors);
        if next == cells {
            return cells;
        }
        cells = next;
    }
}

fn renumber(signatures: Vec<Vec<u32>>, colors: &mut [u32]) -> usize {
    let mut distinct = signatures.clone();
    distinct.sort_unstable();
    distinct.dedup();
    for (c, sig) in colors.iter_mut().zip(&signatures) {
        *c = distinct.binary_search(sig).expect("present") as u32;
    }
    distinct.len()
}

/// Bits `x(perm[u], perm[v])` in graph6 order, packed most significant first
/// so that `Vec<u64>` ordering is lexicographic on the bit string.
fn upper_triangle(g: &Graph, perm: &[usize]) -> Vec<u64> {
    let n = perm.len();
    let total = n * (n - 1) / 2;
    let mut words = vec![0u64; total.div_ceil(64)];
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(perm[u], perm[v]) {
                words[bit / 64] |= 1 << (63 - bit % 64);
            }
            bit += 1;
        }
    }
    words
}

/// The same search for graphs of order at most 64, with rows held in single
/// words and the colouring kept as an ordered partition.
mod small {
    use crate::graph::Graph;

    #[derive(Clone)]
    struct Partition {
        lab: [u8; 64],
        /// Bit `i` is set when position `i` ends a cell.
        ends: u64,
    }

    impl Partition {
        fn cell_end(&self, start: usize) -> usize {
            (self.ends >> start).trailing_zeros() as usize + start
        }

        fn is_discrete(&self, n: usize) -> bool {
            self.ends.count_ones() as usize == n
        }
    }

    struct Search {
        n: usize,
        adj: [u64; 64],
        best: Option<([u64; 32], [u8; 64])>,
        words: usize,
    }

    pub(super) fn labeling(g: &Graph) -> Vec<usize> {
        let n = g.order();
        let mut adj = [0u64; 64];
        for (v, row) in adj.iter_mut().enumerate().take(n) {
            *row = g.row(v)[0];
        }
        let mut lab = [0u8; 64];
        for (i, l) in lab.iter_mut().enumerate().take(n) {
            *l = i as u8;
        }
        let mut search = Search {
            n,
            adj,
            best: None,
            words: (n * (n - 1) / 2).div_ceil(64),
        };
        let mut part = Partition {
            lab,
            ends: 1 << (n - 1),
        };
        search.refine(&mut part);
        search.descend(part);
        let (_, lab) = search.best.expect("at least one leaf");
        lab[..n].iter().map(|&v| v as usize).collect()
    }

    impl Search {
        fn descend(&mut self, part: Partition) {
            let n = self.n;
            if part.is_discrete(n) {
                self.leaf(&part);
                return;
            }
            let mut start = 0;
            let end = loop {
                let end = part.cell_end(start);
                if end > start {
                    break end;
                }
                start = end + 1;
            };
            let mut explored: u64 = 0;
            for i in start..=end {
                let v = part.lab[i] as usize;
                let twin = (0..n)
                    .filter(|&t| explored >> t & 1 == 1)
                    .any(|t| self.adj[v] & !(1 << t) == self.adj[t] & !(1 << v));
                if twin {
                    continue;
                }
                let mut next = part.clone();
                next.lab.swap(start, i);
                next.ends |= 1 << start;
                self.refine(&mut next);
                self.descend(next);
                explored |= 1 << v;
            }
        }

        fn leaf(&mut self, part: &Partition) {
            let mut code = [0u64; 32];
            let mut bit = 0;
            for v in 1..self.n {
                let row = self.adj[part.lab[v] as usize];
                for u in 0..v {
                    if row >> part.lab[u] & 1 == 1 {
                        code[bit / 64] |= 1 << (63 - bit % 64);
                    }
                    bit += 1;
                }
            }
            let w = self.words;
            if self.best.as_ref().map_or(true, |(b, _)| code[..w] > b[..w]) {
                self.best = Some((code, part.lab));
            }
        }

        /// Splits cells by neighbour counts into each cell, in position
        /// order, until the partition is equitable.
        fn refine(&self, part: &mut Partition) {
            let n = self.n;
            let mut keys = [0u32; 64];
            loop {
                let mut changed = false;
                let mut w_start = 0;
                while w_start < n {
                    let w_end = part.cell_end(w_start);
                    let mut wmask = 0u64;
                    for i in w_start..=w_end {
                        wmask |= 1 << part.lab[i];
                    }
                    let mut c_start = 0;
                    while c_start < n {
                        let c_end = part.cell_end(c_start);
                        if c_end > c_start {
                            for i in c_start..=c_end {
                                keys[part.lab[i] as usize] =
                                    (self.adj[part.lab[i] as usize] & wmask).count_ones();
                            }
                            let first = keys[part.lab[c_start] as usize];
                            if (c_start..=c_end).any(|i| keys[part.lab[i] as usize] != first) {
                                part.lab[c_start..=c_end].sort_unstable_by_key(|&v| keys[v as usize]);
                                for i in c_start..c_end {
                                    if keys[part.lab[i] as usize] != keys[part.lab[i + 1] as usize] {
                                        part.ends |= 1 << i;
                                    }
                                }
                                changed = true;
                            }
                        }
                        c_start = c_end + 1;
                    }
                    w_start = part.cell_end(w_start) + 1;
                }
                if !changed {
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
        g.order() == h.order()
            && permutations(g.order())
                .iter()
                .any(|p| g.relabel(p).unwrap() == *h)
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> =
            (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        (0u32..(1 << pairs.len()))
            .map(|mask| {
                let mut g = Graph::new(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                g
            })
            .collect()
    }

    #[test]
    fn p4_is_self_complementary() {
        let p4 = Graph::path(4);
        assert!(brute_isomorphic(&p4, &p4.complement()));
        assert_eq!(canonical_form(&p4), canonical_form(&p4.complement()));
    }

    #[test]
    fn triangle_and_path_differ() {
        assert_ne!(
            canonical_form(&Graph::complete(3)),
            canonical_form(&Graph::path(3))
        );
    }

    #[test]
    fn invariant_under_every_relabeling() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]);
        let form = canonical_form(&g);
        for p in permutations(6) {
            assert_eq!(canonical_form(&g.relabel(&p).unwrap()), form);
        }
    }

    #[test]
    fn class_counts_match_known_sequence() {
        let expected = [1, 2, 4, 11, 34, 156];
        for (k, &count) in (1..=6).zip(expected.iter()) {
            let mut forms: Vec<CanonicalForm> = all_graphs(k).iter().map(canonical_form).collect();
            forms.sort();
            forms.dedup();
            assert_eq!(forms.len(), count, "order {k}");
        }
    }

    #[test]
    fn agrees_with_brute_force_on_order_five() {
        // One representative per class from brute force, then compare every pair.
        let graphs = all_graphs(5);
        let mut reps: Vec<Graph> = Vec::new();
        for g in &graphs {
            if !reps.iter().any(|r| brute_isomorphic(r, g)) {
                reps.push(g.clone());
            }
        }
        assert_eq!(reps.len(), 34);
        let forms: Vec<CanonicalForm> = reps.iter().map(canonical_form).collect();
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                assert_ne!(forms[i], forms[j]);
            }
        }
        for g in &graphs {
            let f = canonical_form(g);
            let owner = reps.iter().position(|r| brute_isomorphic(r, g)).unwrap();
            assert_eq!(f, forms[owner]);
        }
    }

    #[test]
    fn canonical_graph_is_isomorphic_to_input() {
        let g = Graph::from_edges(7, &[(0, 3), (3, 5), (5, 6), (1, 2), (2, 4)]);
        assert!(brute_isomorphic(&g, &canonical_graph(&g)));
    }

    #[test]
    fn handles_highly_symmetric_graphs() {
        for n in [10, 16, 24] {
            let e = Graph::new(n);
            assert_eq!(canonical_graph(&e), e);
            assert_eq!(canonical_graph(&Graph::complete(n)), Graph::complete(n));
        }
    }

    #[test]
    fn general_search_is_invariant_too() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]);
        let form = |h: &Graph| h.induced_unchecked(&general_labeling(h));
        let expected = form(&g);
        for p in permutations(6) {
            assert_eq!(form(&g.relabel(&p).unwrap()), expected);
        }
        let mut forms: Vec<Graph> = all_graphs(5).iter().map(form).collect();
        forms.sort_by_key(|h| write_graph6(h).unwrap());
        forms.dedup();
        assert_eq!(forms.len(), 34);
    }

    #[test]
    fn wide_graphs_use_the_general_search() {
        let n = 70;
        let mut g = Graph::cycle(n);
        g.add_edge(0, 35);
        g.add_edge(3, 50);
        let perm: Vec<usize> = (0..n).map(|i| (i * 17 + 5) % n).collect();
        let h = g.relabel(&perm).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert_ne!(canonical_form(&g), canonical_form(&Graph::cycle(n)));
    }
}
