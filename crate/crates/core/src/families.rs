//! The ten unavoidable prime families and the registry that serves them.
//!
//! Every generator labels its vertices the same way: the `v`-block
//! `v_1..v_n` is `0..n`, the `u`-block `u_1..u_n` is `n..2n`, and the extra
//! vertex `w` (when present) is `2n`.
//!
//! | kind | base graph | order |
//! |---|---|---|
//! | `subdivided-star` | 1-subdivision of `K_{1,n}`: `w u_i`, `u_i v_i` | `2n+1` |
//! | `line-k2n` | line graph of `K_{2,n}`: `v` and `u` cliques, `v_i u_i` | `2n` |
//! | `thin-spider` | `u` clique, pendant `v_i u_i` | `2n` |
//! | `half-graph` | `v_i u_j` for `i <= j` | `2n` |
//! | `h-prime` | half-graph, `u` clique, `w v_i` for all `i` | `2n+1` |
//! | `h-star` | half-graph, `u` clique, `w v_1` | `2n+1` |
//!
//! The `*-complement` kinds are the complements of the matching base graph.
//! Half-graphs and `h-prime` have no complement kind: their complements
//! already contain the same kind of graph two vertices smaller.
//!
//! Kinds are kept in a fixed tag order. When several members of a family set
//! avoid `L`, the first in that order is reported, which keeps certificates
//! stable across runs.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::containment::{is_induced_subgraph, validate_patterns};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::primality::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    SubdividedStar,
    SubdividedStarComplement,
    LineOfK2n,
    LineOfK2nComplement,
    ThinSpider,
    ThinSpiderComplement,
    HalfGraph,
    HPrime,
    HStar,
    HStarComplement,
}

impl FamilyKind {
    /// All kinds in tag order.
    pub const ALL: [FamilyKind; 10] = [
        FamilyKind::SubdividedStar,
        FamilyKind::SubdividedStarComplement,
        FamilyKind::LineOfK2n,
        FamilyKind::LineOfK2nComplement,
        FamilyKind::ThinSpider,
        FamilyKind::ThinSpiderComplement,
        FamilyKind::HalfGraph,
        FamilyKind::HPrime,
        FamilyKind::HStar,
        FamilyKind::HStarComplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::SubdividedStar => "subdivided-star",
            FamilyKind::SubdividedStarComplement => "subdivided-star-complement",
            FamilyKind::LineOfK2n => "line-k2n",
            FamilyKind::LineOfK2nComplement => "line-k2n-complement",
            FamilyKind::ThinSpider => "thin-spider",
            FamilyKind::ThinSpiderComplement => "thin-spider-complement",
            FamilyKind::HalfGraph => "half-graph",
            FamilyKind::HPrime => "h-prime",
            FamilyKind::HStar => "h-star",
            FamilyKind::HStarComplement => "h-star-complement",
        }
    }

    /// The kind this one is the complement of, if any.
    pub fn complement_of(self) -> Option<FamilyKind> {
        match self {
            FamilyKind::SubdividedStarComplement => Some(FamilyKind::SubdividedStar),
            FamilyKind::LineOfK2nComplement => Some(FamilyKind::LineOfK2n),
            FamilyKind::ThinSpiderComplement => Some(FamilyKind::ThinSpider),
            FamilyKind::HStarComplement => Some(FamilyKind::HStar),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyKind> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl Serialize for FamilyKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for FamilyKind {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<FamilyKind, D::Error> {
        let name = String::deserialize(d)?;
        name.parse().map_err(serde::de::Error::custom)
    }
}

/// A constructor for one family of prime graphs indexed by `n`.
pub trait FamilyGenerator: Send + Sync {
    fn kind(&self) -> FamilyKind;

    /// Builds the member with parameter `n` without checking `n >= 3`.
    fn build(&self, n: usize) -> Graph;
}

fn v(i: usize) -> usize {
    i - 1
}

fn u(n: usize, i: usize) -> usize {
    n + i - 1
}

fn add_clique(g: &mut Graph, vertices: impl Iterator<Item = usize> + Clone) {
    for (a, x) in vertices.clone().enumerate() {
        for y in vertices.clone().skip(a + 1) {
            g.add_edge(x, y);
        }
    }
}

/// `v_i u_j` for `1 <= i <= j <= n`.
fn add_half_graph_edges(g: &mut Graph, n: usize) {
    for i in 1..=n {
        for j in i..=n {
            g.add_edge(v(i), u(n, j));
        }
    }
}

struct SubdividedStar;

impl FamilyGenerator for SubdividedStar {
    fn kind(&self) -> FamilyKind {
        FamilyKind::SubdividedStar
    }

    fn build(&self, n: usize) -> Graph {
        let mut g = Graph::new(2 * n + 1);
        for i in 1..=n {
            g.add_edge(2 * n, u(n, i));
            g.add_edge(u(n, i), v(i));
        }
        g
    }
}

struct LineOfK2n;

impl FamilyGenerator for LineOfK2n {
    fn kind(&self) -> FamilyKind {
        FamilyKind::LineOfK2n
    }

    // v_i is the edge x_1 y_i and u_i the edge x_2 y_i of K_{2,n}.
    fn build(&self, n: usize) -> Graph {
        let mut g = Graph::new(2 * n);
        add_clique(&mut g, 0..n);
        add_clique(&mut g, n..2 * n);
        for i in 1..=n {
            g.add_edge(v(i), u(n, i));
        }
        g
    }
}

struct ThinSpider;

impl FamilyGenerator for ThinSpider {
    fn kind(&self) -> FamilyKind {
        FamilyKind::ThinSpider
    }

    fn build(&self, n: usize) -> Graph {
        let mut g = Graph::new(2 * n);
        add_clique(&mut g, n..2 * n);
        for i in 1..=n {
            g.add_edge(v(i), u(n, i));
        }
        g
    }
}

struct HalfGraph;

impl FamilyGenerator for HalfGraph {
    fn kind(&self) -> FamilyKind {
        FamilyKind::HalfGraph
    }

    fn build(&self, n: usize) -> Graph {
        let mut g = Graph::new(2 * n);
        add_half_graph_edges(&mut g, n);
        g
    }
}

struct HPrime;

impl FamilyGenerator for HPrime {
    fn kind(&self) -> FamilyKind {
        FamilyKind::HPrime
    }

    fn build(&self, n: usize) -> Graph {
        let mut g = Graph::new(2 * n + 1);
        add_half_graph_edges(&mut g, n);
        add_clique(&mut g, n..2 * n);
        for i in 1..=n {
            g.add_edge(2 * n, v(i));
        }
        g
    }
}

struct HStar;

impl FamilyGenerator for HStar {
    fn kind(&self) -> FamilyKind {
        FamilyKind::HStar
    }

    fn build(&self, n: usize) -> Graph {
        let mut g = Graph::new(2 * n + 1);
        add_half_graph_edges(&mut g, n);
        add_clique(&mut g, n..2 * n);
        g.add_edge(2 * n, v(1));
        g
    }
}

struct Complemented<G> {
    kind: FamilyKind,
    base: G,
}

impl<G: FamilyGenerator> FamilyGenerator for Complemented<G> {
    fn kind(&self) -> FamilyKind {
        self.kind
    }

    fn build(&self, n: usize) -> Graph {
        self.base.build(n).complement()
    }
}

/// Family generators keyed by [`FamilyKind`] and by name, in tag order.
pub struct FamilyRegistry {
    generators: Vec<Box<dyn FamilyGenerator>>,
}

impl FamilyRegistry {
    fn standard() -> FamilyRegistry {
        let generators: Vec<Box<dyn FamilyGenerator>> = vec![
            Box::new(SubdividedStar),
            Box::new(Complemented {
                kind: FamilyKind::SubdividedStarComplement,
                base: SubdividedStar,
            }),
            Box::new(LineOfK2n),
            Box::new(Complemented {
                kind: FamilyKind::LineOfK2nComplement,
                base: LineOfK2n,
            }),
            Box::new(ThinSpider),
            Box::new(Complemented {
                kind: FamilyKind::ThinSpiderComplement,
                base: ThinSpider,
            }),
            Box::new(HalfGraph),
            Box::new(HPrime),
            Box::new(HStar),
            Box::new(Complemented {
                kind: FamilyKind::HStarComplement,
                base: HStar,
            }),
        ];
        debug_assert!(generators
            .iter()
            .map(|g| g.kind())
            .eq(FamilyKind::ALL.into_iter()));
        FamilyRegistry { generators }
    }

    /// The process-wide registry.
    pub fn global() -> &'static FamilyRegistry {
        static REGISTRY: OnceLock<FamilyRegistry> = OnceLock::new();
        REGISTRY.get_or_init(FamilyRegistry::standard)
    }

    pub fn get(&self, kind: FamilyKind) -> &dyn FamilyGenerator {
        self.generators[kind as usize].as_ref()
    }

    pub fn by_name(&self, name: &str) -> Result<&dyn FamilyGenerator> {
        Ok(self.get(name.parse()?))
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn FamilyGenerator> {
        self.generators.iter().map(|g| g.as_ref())
    }
}

fn check_parameter(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::ParameterTooSmall(n))
    } else {
        Ok(())
    }
}

pub fn generate_family(kind: FamilyKind, n: usize) -> Result<Graph> {
    check_parameter(n)?;
    Ok(FamilyRegistry::global().get(kind).build(n))
}

/// Half-graph of height `height`, without the `n >= 3` guard.
pub fn half_graph(height: usize) -> Graph {
    HalfGraph.build(height)
}

/// The ten members of the family set at parameter `n`, in tag order.
pub fn family_set(n: usize) -> Result<Vec<Graph>> {
    check_parameter(n)?;
    let members: Vec<Graph> = FamilyRegistry::global().iter().map(|g| g.build(n)).collect();
    debug_assert!(members.iter().all(is_prime), "family member not prime");
    Ok(members)
}

/// The first kind whose member at parameter `n` contains no graph of
/// `patterns`.
pub fn l_free_family_member(patterns: &[Graph], n: usize) -> Result<Option<FamilyKind>> {
    check_parameter(n)?;
    validate_patterns(patterns)?;
    Ok(FamilyRegistry::global().iter().find_map(|gen| {
        let member = gen.build(n);
        patterns
            .iter()
            .all(|p| !is_induced_subgraph(p, &member))
            .then(|| gen.kind())
    }))
}
