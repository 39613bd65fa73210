//! Interchangeable ways to decide whether a string's chain contains a graph.
//!
//! Routes register by name so the CLI and the tests can pick one at run
//! time. The two built-in routes are independent: one searches for an
//! induced embedding in the decoded chain graph, the other matches the
//! graph's representations against the string without building a graph.

use crate::chains::{string_to_graph, BitString};
use crate::containment::is_induced_subgraph;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::representations::{enumerate_representations, representation_occurs_in};

pub trait ContainmentRoute: Send + Sync {
    fn name(&self) -> &'static str;

    fn contains(&self, pattern: &Graph, s: &BitString) -> Result<bool>;
}

/// Embedding search on the decoded chain. Limited by the graph order cap.
pub struct DirectEmbedding;

impl ContainmentRoute for DirectEmbedding {
    fn name(&self) -> &'static str {
        "direct"
    }

    fn contains(&self, pattern: &Graph, s: &BitString) -> Result<bool> {
        Ok(is_induced_subgraph(pattern, &string_to_graph(s)?))
    }
}

/// Ordered, gap-separated block matching of every representation.
pub struct RepresentationMatch;

impl ContainmentRoute for RepresentationMatch {
    fn name(&self) -> &'static str {
        "representations"
    }

    fn contains(&self, pattern: &Graph, s: &BitString) -> Result<bool> {
        Ok(enumerate_representations(pattern)?
            .iter()
            .any(|r| representation_occurs_in(r, s)))
    }
}

static ROUTES: [&dyn ContainmentRoute; 2] = [&DirectEmbedding, &RepresentationMatch];

pub fn routes() -> &'static [&'static dyn ContainmentRoute] {
    &ROUTES
}

pub fn route_by_name(name: &str) -> Result<&'static dyn ContainmentRoute> {
    ROUTES
        .iter()
        .copied()
        .find(|r| r.name() == name)
        .ok_or_else(|| Error::UnknownRoute(name.to_string()))
}
