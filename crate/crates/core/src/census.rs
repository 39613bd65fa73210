//! Order-by-order listing of the prime graphs of a class.
//!
//! Orders 1 to 5 come from exhaustive enumeration. From order 6 on, every
//! prime graph on `k` vertices contains a prime graph on `k - 1` vertices,
//! except the half-graph of height `k / 2` and its complement, so the
//! candidates at order `k` are the one-vertex extensions of the primes at
//! order `k - 1` plus those two graphs. The listing stops after two
//! consecutive orders without primes: from then on there are none.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, CanonicalForm};
use crate::containment::{is_l_free, validate_patterns};
use crate::error::{Error, Result};
use crate::families::half_graph;
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::oracle::naive_primes_up_to;
use crate::primality::is_prime;

pub const SEED_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    /// Canonical prime `L`-free graphs of each examined order, sorted by
    /// canonical form.
    pub by_order: BTreeMap<usize, Vec<Graph>>,
    pub halted: bool,
    pub last_order: usize,
}

impl CensusResult {
    pub fn total(&self) -> usize {
        self.by_order.values().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub max_order: usize,
    /// Upper limit on labeled extensions examined for any single order.
    pub max_candidates: Option<u64>,
    pub threads: Option<usize>,
}

impl CensusOptions {
    pub fn new(max_order: usize) -> CensusOptions {
        CensusOptions {
            max_order,
            max_candidates: None,
            threads: None,
        }
    }
}

/// Every one-vertex extension of every member of `primes_prev`, plus the
/// half-graph of height `order / 2` and its complement when `order` is
/// even. One graph per isomorphism class, sorted by canonical form.
pub fn next_order_candidates(primes_prev: &[Graph], order: usize) -> Vec<Graph> {
    let mut forms: HashSet<CanonicalForm> = primes_prev
        .par_iter()
        .filter(|g| g.order() + 1 == order)
        .fold(HashSet::new, |mut acc, g| {
            let n = g.order();
            for mask in 0..1u64 << n {
                let nbrs = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
                acc.insert(canonical_form(&g.extend_with(&nbrs)));
            }
            acc
        })
        .reduce(HashSet::new, merge);
    for g in injected(order) {
        forms.insert(canonical_form(&g));
    }
    sorted_graphs(forms)
}

pub fn run_census(patterns: &[Graph], max_order: usize) -> Result<CensusResult> {
    run_census_with(patterns, &CensusOptions::new(max_order))
}

pub fn run_census_with(patterns: &[Graph], options: &CensusOptions) -> Result<CensusResult> {
    validate_patterns(patterns)?;
    if options.max_order <= SEED_ORDER {
        return Err(Error::OrderOutOfRange {
            order: options.max_order,
            min: SEED_ORDER + 1,
            max: crate::graph::DEFAULT_MAX_ORDER,
        });
    }
    match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(|| census(patterns, options)),
        None => census(patterns, options),
    }
}

fn census(patterns: &[Graph], options: &CensusOptions) -> Result<CensusResult> {
    let mut by_order = BTreeMap::new();
    let mut empty_run = 0;
    let mut last_order = 0;
    for (order, primes) in naive_primes_up_to(patterns, SEED_ORDER)? {
        empty_run = if primes.is_empty() { empty_run + 1 } else { 0 };
        by_order.insert(order, primes);
        last_order = order;
        if empty_run == 2 {
            return Ok(CensusResult {
                by_order,
                halted: true,
                last_order,
            });
        }
    }

    let filter = ExtensionFilter::new(patterns);
    for order in SEED_ORDER + 1..=options.max_order {
        let prev = &by_order[&(order - 1)];
        if let Some(budget) = options.max_candidates {
            let labeled = (prev.len() as u64).saturating_mul(1u64 << (order - 1).min(63));
            if labeled > budget {
                return Err(Error::CensusBudgetExceeded { order, budget });
            }
        }
        let primes = grow(prev, order, patterns, &filter)?;
        empty_run = if primes.is_empty() { empty_run + 1 } else { 0 };
        by_order.insert(order, primes);
        last_order = order;
        if empty_run == 2 {
            break;
        }
    }
    Ok(CensusResult {
        by_order,
        halted: empty_run == 2,
        last_order,
    })
}

fn injected(order: usize) -> Vec<Graph> {
    if order % 2 == 0 && order >= 2 {
        let h = half_graph(order / 2);
        let c = h.complement();
        vec![h, c]
    } else {
        Vec::new()
    }
}

fn merge(mut a: HashSet<CanonicalForm>, b: HashSet<CanonicalForm>) -> HashSet<CanonicalForm> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    a.extend(b);
    a
}

fn sorted_graphs(forms: HashSet<CanonicalForm>) -> Vec<Graph> {
    let mut forms: Vec<CanonicalForm> = forms.into_iter().collect();
    forms.par_sort_unstable();
    forms
        .par_iter()
        .map(|f| parse_graph6(f.as_str()).expect("canonical forms are graph6"))
        .collect()
}

/// Prime `L`-free graphs of `order`, given the complete list one order down.
fn grow(prev: &[Graph], order: usize, patterns: &[Graph], filter: &ExtensionFilter) -> Result<Vec<Graph>> {
    let mut forms = prev
        .par_iter()
        .fold(HashSet::new, |mut acc, g| {
            filter.for_each_extension(g, |ext| {
                acc.insert(canonical_form(&ext));
            });
            acc
        })
        .reduce(HashSet::new, merge);
    for g in injected(order) {
        if is_prime(&g) && is_l_free(&g, patterns)? {
            forms.insert(canonical_form(&g));
        }
    }
    Ok(sorted_graphs(forms))
}

/// Labeled copies of a small pattern, as a bit table indexed by the
/// upper-triangle adjacency mask.
struct LabeledCopies {
    pattern: Graph,
    table: Vec<u64>,
}

const MAX_TABLE_PATTERN: usize = 7;

impl LabeledCopies {
    fn new(pattern: &Graph) -> LabeledCopies {
        let p = pattern.order();
        let bits = p * (p - 1) / 2;
        let mut table = vec![0u64; (1usize << bits).div_ceil(64)];
        let mut perm: Vec<usize> = (0..p).collect();
        loop {
            let mask = pair_mask(p, |a, b| pattern.has_edge(perm[a], perm[b]));
            table[mask / 64] |= 1 << (mask % 64);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        LabeledCopies {
            pattern: pattern.clone(),
            table,
        }
    }

    fn contains(&self, mask: usize) -> bool {
        self.table[mask / 64] >> (mask % 64) & 1 == 1
    }
}

/// Bit `index(a, b)` for `a < b` in column order: pairs `(0,1), (0,2), (1,2), ..`.
fn pair_mask(p: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> usize {
    let mut mask = 0;
    let mut bit = 0;
    for b in 1..p {
        for a in 0..b {
            if adjacent(a, b) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
        return false;
    };
    let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).expect("exists");
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Enumerates the extensions `g + x` of a prime `L`-free graph `g` that are
/// prime and `L`-free.
///
/// Since `g` is prime, every homogeneous set of `g + x` meets `V(g)` in at
/// most one vertex or in all of it, so `g + x` is prime unless `N(x)` is
/// empty or all of `V(g)`, or `x` has a twin. Since `g` is `L`-free, any
/// copy of a pattern in `g + x` uses `x`; the neighbourhood is chosen one
/// vertex at a time and abandoned as soon as the decided part completes a
/// copy through `x`.
struct ExtensionFilter {
    small: Vec<LabeledCopies>,
    large: Vec<Graph>,
}

const MAX_FAST_ORDER: usize = 63;

impl ExtensionFilter {
    fn new(patterns: &[Graph]) -> ExtensionFilter {
        let (small, large): (Vec<&Graph>, Vec<&Graph>) =
            patterns.iter().partition(|p| p.order() <= MAX_TABLE_PATTERN);
        ExtensionFilter {
            small: small.into_iter().map(LabeledCopies::new).collect(),
            large: large.into_iter().cloned().collect(),
        }
    }

    fn for_each_extension(&self, g: &Graph, mut emit: impl FnMut(Graph)) {
        let n = g.order();
        if n > MAX_FAST_ORDER {
            let patterns: Vec<Graph> = self
                .small
                .iter()
                .map(|c| c.pattern.clone())
                .chain(self.large.iter().cloned())
                .collect();
            for_each_subset(n, &mut |nbrs| {
                let ext = g.extend_with(nbrs);
                if is_prime(&ext) && is_l_free(&ext, &patterns).expect("validated") {
                    emit(ext);
                }
            });
            return;
        }
        let rows: Vec<u64> = (0..n).map(|v| g.row(v)[0]).collect();
        self.choose(g, &rows, 0, 0, &mut emit);
    }

    fn choose(&self, g: &Graph, rows: &[u64], v: usize, inside: u64, emit: &mut impl FnMut(Graph)) {
        if v == rows.len() {
            if let Some(ext) = self.finish(g, rows, inside) {
                emit(ext);
            }
            return;
        }
        for with_v in [inside, inside | 1 << v] {
            if !self.completes_copy(rows, v, with_v) {
                self.choose(g, rows, v + 1, with_v, emit);
            }
        }
    }

    /// Whether some pattern copy through `x` has `v` as its largest old vertex.
    fn completes_copy(&self, rows: &[u64], v: usize, inside: u64) -> bool {
        self.small.iter().any(|copies| {
            let k = copies.pattern.order() - 1;
            if k == 0 {
                return true;
            }
            if k > v + 1 {
                return false;
            }
            // t[..k - 1] runs over increasing subsets of 0..v; t[k - 1] = v
            let mut t = [0usize; MAX_TABLE_PATTERN];
            for (i, slot) in t.iter_mut().enumerate().take(k - 1) {
                *slot = i;
            }
            t[k - 1] = v;
            loop {
                let mut mask = 0usize;
                let mut bit = 0;
                for b in 1..k {
                    for a in 0..b {
                        mask |= ((rows[t[a]] >> t[b] & 1) as usize) << bit;
                        bit += 1;
                    }
                }
                for &a in &t[..k] {
                    mask |= ((inside >> a & 1) as usize) << bit;
                    bit += 1;
                }
                if copies.contains(mask) {
                    return true;
                }
                let Some(i) = (0..k - 1).rev().find(|&i| t[i] < v - (k - 1) + i) else {
                    return false;
                };
                t[i] += 1;
                for j in i + 1..k - 1 {
                    t[j] = t[j - 1] + 1;
                }
            }
        })
    }

    fn finish(&self, g: &Graph, rows: &[u64], inside: u64) -> Option<Graph> {
        let n = rows.len();
        if inside == 0 || inside.count_ones() as usize == n {
            return None;
        }
        if (0..n).any(|y| rows[y] == inside & !(1 << y)) {
            return None;
        }
        let nbrs = VertexSet::from_vertices(n, (0..n).filter(|&z| inside >> z & 1 == 1));
        let ext = g.extend_with(&nbrs);
        if !self.large.is_empty() && !is_l_free(&ext, &self.large).expect("validated") {
            return None;
        }
        Some(ext)
    }
}

fn for_each_subset(n: usize, f: &mut impl FnMut(&VertexSet)) {
    fn rec(v: usize, set: &mut VertexSet, f: &mut impl FnMut(&VertexSet)) {
        if v == set.capacity() {
            f(set);
            return;
        }
        rec(v + 1, set, f);
        set.insert(v);
        rec(v + 1, set, f);
        set.remove(v);
    }
    rec(0, &mut VertexSet::new(n), f);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_graph;
    use crate::oracle::enumerate_all_graphs;

    fn order4_classes() -> Vec<Graph> {
        enumerate_all_graphs(4).unwrap().members
    }

    #[test]
    fn candidates_without_parents_are_the_injected_pair() {
        let c = next_order_candidates(&[], 8);
        assert_eq!(c.len(), 2);
        let forms: Vec<_> = c.iter().map(canonical_form).collect();
        assert!(forms.contains(&canonical_form(&half_graph(4))));
        assert!(forms.contains(&canonical_form(&half_graph(4).complement())));
        assert!(next_order_candidates(&[], 7).is_empty());
    }

    #[test]
    fn candidates_from_c5() {
        let c = next_order_candidates(&[Graph::cycle(5)], 6);
        // C5 has 8 neighbourhood orbits under its dihedral group
        assert_eq!(c.len(), 8 + 2);
        assert!(c.iter().all(|g| g.order() == 6));
    }

    #[test]
    fn cographs_halt() {
        let r = run_census(&[Graph::path(4)], 12).unwrap();
        assert!(r.halted);
        assert_eq!(r.last_order, 4);
        assert!(r.by_order.iter().all(|(&k, v)| k <= 2 || v.is_empty()));
        assert_eq!(r.by_order[&1].len(), 1);
        assert_eq!(r.by_order[&2].len(), 2);
    }

    #[test]
    fn single_vertex_forbidden() {
        let r = run_census(&[Graph::new(1)], 6).unwrap();
        assert!(r.halted);
        assert_eq!(r.last_order, 2);
        assert_eq!(r.total(), 0);
    }

    #[test]
    fn rejects_small_caps_and_empty_patterns() {
        assert!(matches!(
            run_census(&[Graph::path(4)], 5),
            Err(Error::OrderOutOfRange { order: 5, .. })
        ));
        assert_eq!(run_census(&[Graph::new(0)], 8), Err(Error::EmptyPattern(0)));
    }

    #[test]
    fn budget_is_enforced() {
        let options = CensusOptions {
            max_order: 9,
            max_candidates: Some(10),
            threads: None,
        };
        assert!(matches!(
            run_census_with(&[Graph::star(3)], &options),
            Err(Error::CensusBudgetExceeded { order: 6, budget: 10 })
        ));
    }

    #[test]
    fn claw_free_census_lists_cycles() {
        let r = run_census(&[Graph::star(3)], 9).unwrap();
        assert!(!r.halted);
        for k in 5..=9 {
            let c = canonical_graph(&Graph::cycle(k));
            assert!(r.by_order[&k].contains(&c), "C{k}");
        }
    }

    #[test]
    fn listed_graphs_are_prime_free_and_distinct() {
        for pattern in order4_classes() {
            let r = run_census(std::slice::from_ref(&pattern), 8).unwrap();
            for list in r.by_order.values() {
                let forms: HashSet<_> = list.iter().map(canonical_form).collect();
                assert_eq!(forms.len(), list.len());
                for g in list {
                    assert!(is_prime(g));
                    assert!(is_l_free(g, std::slice::from_ref(&pattern)).unwrap());
                    assert_eq!(canonical_graph(g), *g);
                }
            }
            if r.halted {
                let k = r.last_order;
                assert!(r.by_order[&k].is_empty() && r.by_order[&(k - 1)].is_empty());
            }
        }
    }

    #[test]
    fn filter_matches_full_checks() {
        for pattern in [Graph::star(3), Graph::complete(4), Graph::cycle(4), Graph::path(5)] {
            let patterns = [pattern];
            let filter = ExtensionFilter::new(&patterns);
            let parents = run_census(&patterns, 6).unwrap().by_order[&6].clone();
            for g in &parents {
                let mut fast = HashSet::new();
                filter.for_each_extension(g, |e| {
                    fast.insert(e);
                });
                let n = g.order();
                for mask in 0..1u64 << n {
                    let nbrs = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
                    let e = g.extend_with(&nbrs);
                    let keep = is_prime(&e) && is_l_free(&e, &patterns).unwrap();
                    assert_eq!(fast.contains(&e), keep);
                }
            }
        }
    }
}
