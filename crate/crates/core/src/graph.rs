//! Labeled simple graphs stored as dense bit matrices.
//!
//! Vertices are `0..order`. Adjacency is symmetric and irreflexive; every
//! mutating method keeps both rows in sync.

use std::fmt;

use crate::bitset::{words_for, VertexSet, WORD_BITS};
use crate::error::{Error, Result};

/// Largest order a [`Graph`] may have unless a caller raises the limit
/// through [`Graph::try_with_limit`].
pub const DEFAULT_MAX_ORDER: usize = 512;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    ///
    /// Panics if `order` exceeds [`DEFAULT_MAX_ORDER`]; use [`Graph::try_new`]
    /// for untrusted sizes.
    pub fn new(order: usize) -> Graph {
        Graph::try_new(order).expect("graph order within the default maximum")
    }

    pub fn try_new(order: usize) -> Result<Graph> {
        Graph::try_with_limit(order, DEFAULT_MAX_ORDER)
    }

    pub fn try_with_limit(order: usize, max_order: usize) -> Result<Graph> {
        if order > max_order {
            return Err(Error::OrderTooLarge {
                order,
                max: max_order,
            });
        }
        let stride = words_for(order).max(1);
        Ok(Graph {
            order,
            stride,
            bits: vec![0; stride * order],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(order);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(order: usize) -> Graph {
        Graph::new(order).complement()
    }

    /// Path `0 - 1 - ... - (order-1)`.
    pub fn path(order: usize) -> Graph {
        let mut g = Graph::new(order);
        for v in 1..order {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(order: usize) -> Graph {
        let mut g = Graph::path(order);
        if order >= 3 {
            g.add_edge(order - 1, 0);
        }
        g
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.stride + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u < self.order && v < self.order, "vertex out of range");
        if u == v {
            return;
        }
        let (wu, bu) = (u * self.stride + v / WORD_BITS, v % WORD_BITS);
        let (wv, bv) = (v * self.stride + u / WORD_BITS, u % WORD_BITS);
        if present {
            self.bits[wu] |= 1 << bu;
            self.bits[wv] |= 1 << bv;
        } else {
            self.bits[wu] &= !(1 << bu);
            self.bits[wv] &= !(1 << bv);
        }
    }

    /// Adds the edge `uv`. Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.set_edge(u, v, true);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.set_edge(u, v, false);
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.order, self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
                .collect::<Vec<_>>()
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for u in 0..self.order {
            let row = &mut g.bits[u * self.stride..(u + 1) * self.stride];
            for w in row.iter_mut() {
                *w = !*w;
            }
            let extra = self.stride * WORD_BITS - self.order;
            if extra > 0 {
                row[self.stride - 1] &= !0u64 >> extra;
            }
            if self.order > 0 {
                row[u / WORD_BITS] &= !(1 << (u % WORD_BITS));
            }
        }
        g
    }

    /// The subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = VertexSet::new(self.order);
        for &v in vertices {
            if v >= self.order {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: self.order,
                });
            }
            if seen.contains(v) {
                return Err(Error::DuplicateVertex(v));
            }
            seen.insert(v);
        }
        Ok(self.induced_unchecked(vertices))
    }

    pub(crate) fn induced_unchecked(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels so that vertex `i` of the result is `permutation[i]` of `self`.
    pub fn relabel(&self, permutation: &[usize]) -> Result<Graph> {
        if permutation.len() != self.order {
            return Err(Error::NotAnOrdering);
        }
        self.induced_subgraph(permutation)
    }

    /// Adds one vertex (index `order`) adjacent to exactly `neighbors`.
    pub fn extend_with(&self, neighbors: &VertexSet) -> Graph {
        let mut g = Graph::new(self.order + 1);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for v in neighbors.iter() {
            g.add_edge(self.order, v);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.order + other.order);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.order, v + self.order);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}
