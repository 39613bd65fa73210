//! Brute-force reference implementations.
//!
//! Nothing here touches the primality, containment or census code: the
//! only shared pieces are [`Graph`] and [`canonical_form`]. These routines
//! seed the census at small orders and cross-check everything else.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_CATALOG_ORDER: usize = 7;
pub const MAX_NAIVE_PRIME_ORDER: usize = 16;

/// One representative per isomorphism class of a given order, each in
/// canonical labeling, sorted by canonical form.
#[derive(Debug, Clone)]
pub struct GraphCatalog {
    pub order: usize,
    pub members: Vec<Graph>,
}

fn graph_from_mask(order: usize, mask: u64) -> Graph {
    let mut g = Graph::new(order);
    let mut bit = 0;
    for v in 1..order {
        for u in 0..v {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

/// Every labeled graph on `order` vertices, deduplicated by canonical form.
pub fn enumerate_all_graphs(order: usize) -> Result<GraphCatalog> {
    if !(1..=MAX_CATALOG_ORDER).contains(&order) {
        return Err(Error::OrderOutOfRange {
            order,
            min: 1,
            max: MAX_CATALOG_ORDER,
        });
    }
    let pairs = order * (order - 1) / 2;
    let mut forms: Vec<CanonicalForm> = (0..1u64 << pairs)
        .into_par_iter()
        .map(|mask| canonical_form(&graph_from_mask(order, mask)))
        .collect();
    forms.par_sort_unstable();
    forms.dedup();
    let members = forms
        .iter()
        .map(|f| crate::graph6::parse_graph6(f.as_str()).expect("canonical forms are graph6"))
        .collect();
    Ok(GraphCatalog { order, members })
}

/// Subset scan over every `X` with `2 <= |X| < order`.
pub fn naive_is_prime(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n > MAX_NAIVE_PRIME_ORDER {
        return Err(Error::OrderOutOfRange {
            order: n,
            min: 0,
            max: MAX_NAIVE_PRIME_ORDER,
        });
    }
    let full = (1u32 << n) - 1;
    for x in 1..full {
        if x.count_ones() < 2 {
            continue;
        }
        let homogeneous = (0..n).filter(|&y| x >> y & 1 == 0).all(|y| {
            let members = (0..n).filter(|&m| x >> m & 1 == 1);
            let adjacent = members.clone().filter(|&m| g.has_edge(y, m)).count();
            adjacent == 0 || adjacent == members.count()
        });
        if homogeneous {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `pattern` is isomorphic to the subgraph induced by some vertex
/// subset of `host`, tried subset by subset.
pub fn naive_contains(pattern: &Graph, host: &Graph) -> bool {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return false;
    }
    let target = canonical_form(pattern);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let sub = host.induced_subgraph(&subset).expect("valid subset");
        if canonical_form(&sub) == target {
            return true;
        }
        // next k-combination of 0..n in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else {
            return false;
        };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// For each order `1..=max_order`, the canonical prime graphs of that order
/// containing no member of `patterns`.
pub fn naive_primes_up_to(
    patterns: &[Graph],
    max_order: usize,
) -> Result<BTreeMap<usize, Vec<Graph>>> {
    if max_order > MAX_CATALOG_ORDER {
        return Err(Error::OrderOutOfRange {
            order: max_order,
            min: 1,
            max: MAX_CATALOG_ORDER,
        });
    }
    if let Some(i) = patterns.iter().position(|p| p.order() == 0) {
        return Err(Error::EmptyPattern(i));
    }
    let mut out = BTreeMap::new();
    for order in 1..=max_order {
        let catalog = enumerate_all_graphs(order)?;
        let mut primes = Vec::new();
        for g in catalog.members {
            if naive_is_prime(&g)? && !patterns.iter().any(|p| naive_contains(p, &g)) {
                primes.push(canonical_graph(&g));
            }
        }
        out.insert(order, primes);
    }
    Ok(out)
}
