//! Structural and numerical checks of traffic independence.
//!
//! A test graph is a free product in a partition of its labels into
//! families when the bipartite graph χ(T) of single-family components and
//! shared vertices is a tree. Traffic independence asks the limit to
//! factor over those components and to vanish on every other graph.
//!
//! ```
//! use traffic_graph::{Edge, TestGraph};
//! use traffic_independence::{is_free_product, singleton_families};
//!
//! let t = TestGraph::from_edges(vec![Edge::new(0, 0, "x"), Edge::new(0, 0, "y")]).unwrap();
//! let (free, witness) = is_free_product(&t, &singleton_families(["x", "y"])).unwrap();
//! assert!(free && witness.is_none());
//! ```

mod chi;
mod corpus;
mod error;
mod freeness;
mod verify;

pub use chi::{
    chi_graph, is_free_product, singleton_families, ChiGraph, ChiNode, Component, Families,
};
pub use corpus::{double_tree_corpus, for_each_double_tree, witness_graphs};
pub use error::IndependenceError;
pub use freeness::{
    free_prediction, freeness_moment_test, label_moments, traffic_prediction, FreenessReport,
};
pub use verify::{
    audit_double_trees, verify_traffic_independence, IndependenceReport, Value, Verdict,
};
