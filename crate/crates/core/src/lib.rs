//! Prime graphs in hereditary classes defined by finitely many forbidden
//! induced subgraphs.
//!
//! The central entry point is [`decide`], which answers whether `Free(L)`
//! contains infinitely many prime graphs and returns a checkable
//! certificate when it does. [`run_census`] lists the prime graphs of a
//! class order by order.

pub mod bitset;
pub mod canon;
pub mod census;
pub mod chains;
pub mod containment;
pub mod decider;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod primality;
pub mod representations;
pub mod routes;

pub use bitset::VertexSet;
pub use canon::{are_isomorphic, canonical_form, canonical_graph, canonical_labeling, CanonicalForm};
pub use census::{next_order_candidates, run_census, run_census_with, CensusOptions, CensusResult};
pub use chains::{chain_to_string, complement_string, power, string_to_graph, BitString, Occurrence};
pub use containment::{find_induced_embedding, first_embedded_pattern, is_induced_subgraph, is_l_free, Embedding};
pub use decider::{
    chain_length_bound, decide, Bounds, Certificate, DecideOptions, Decision, Outcome, PeriodCap,
};
pub use error::{Error, Result};
pub use families::{family_set, generate_family, half_graph, l_free_family_member, FamilyKind, FamilyRegistry};
pub use graph::Graph;
pub use graph6::{parse_graph6, parse_graph6_lines, write_graph6};
pub use primality::{find_homogeneous_set, is_prime, minimal_module_closure, HomogeneousSetWitness};
pub use representations::{
    enumerate_representations, extract_period, reconstruct_graph, string_contains_graph, Representation,
    RepresentationIndex,
};
pub use routes::{route_by_name, routes, ContainmentRoute};
