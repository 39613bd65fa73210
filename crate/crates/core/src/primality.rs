//! Homogeneous sets and primality.
//!
//! A homogeneous set of `G` is a vertex set `X` with `2 <= |X| < |V(G)|`
//! such that every vertex outside `X` is adjacent to all of `X` or to none
//! of it. A graph is prime when it has none. Graphs on at most two vertices
//! are prime by the size bounds alone; nothing downstream depends on that
//! convention since only arbitrarily large primes matter to the decider.
//!
//! The test closes every vertex pair under "absorb a vertex that splits the
//! set" and reports the first closure that stops short of the whole graph.
//! That is `O(n^2)` closures of `O(n^2 / 64)` word operations each, which is
//! plenty at the orders used here.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousSetWitness {
    pub members: VertexSet,
}

impl HomogeneousSetWitness {
    /// Checks the size bounds and the homogeneity condition against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let size = self.members.len();
        size >= 2 && size < g.order() && first_splitter(g, &self.members).is_none()
    }
}

/// Lowest-index vertex outside `set` with both a neighbour and a
/// non-neighbour inside it.
fn first_splitter(g: &Graph, set: &VertexSet) -> Option<usize> {
    let size = set.len();
    (0..g.order()).find(|&w| {
        if set.contains(w) {
            return false;
        }
        let common = set.count_common(g.row(w));
        common != 0 && common != size
    })
}

/// The inclusion-minimal homogeneous-or-full set containing `u` and `v`.
///
/// Splitting vertices are absorbed lowest index first; the result does not
/// depend on that order because the closure is an intersection of all sets
/// with the property.
pub fn minimal_module_closure(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    let order = g.order();
    for x in [u, v] {
        if x >= order {
            return Err(Error::VertexOutOfRange { vertex: x, order });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(closure(g, u, v))
}

fn closure(g: &Graph, u: usize, v: usize) -> VertexSet {
    let mut set = VertexSet::from_vertices(g.order(), [u, v]);
    let mut size = 2;
    while size < g.order() {
        match first_splitter(g, &set) {
            Some(w) => {
                set.insert(w);
                size += 1;
            }
            None => break,
        }
    }
    set
}

pub fn find_homogeneous_set(g: &Graph) -> Option<HomogeneousSetWitness> {
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            let members = closure(g, u, v);
            if members.len() < n {
                return Some(HomogeneousSetWitness { members });
            }
        }
    }
    None
}

pub fn is_prime(g: &Graph) -> bool {
    find_homogeneous_set(g).is_none()
}
