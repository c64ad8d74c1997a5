//! Combinatorial core for traffic probability computations.
//!
//! A [`TestGraph`] is a finite connected multidigraph whose edges carry an
//! indeterminate label and an optional adjoint mark. Attaching an ordered
//! pair of roots gives a [`GraphMonomial`], the graph analogue of a
//! noncommutative word; attaching an arbitrary ordered list of roots gives
//! an [`NGraphMonomial`]. Finite linear combinations of monomials, keyed by
//! canonical form, form a [`TrafficPolynomial`].
//!
//! The [`partition`] module supplies set partitions of vertex sets together
//! with the Möbius function of the partition lattice, which is what turns
//! plain traces into injective traces.
//!
//! ```
//! use traffic_graph::{GraphMonomial, dsl};
//!
//! let x = GraphMonomial::edge("x");
//! let path = x.concat(&x);
//! assert_eq!(path.graph().edge_count(), 2);
//! let cycle = GraphMonomial::eta(&["x", "x", "x"]).delta();
//! assert_eq!(cycle.vertex_count(), 3);
//! let parsed = dsl::parse_dsl("e 1 2 x\ne 2 1 x\nin 1\nout 2").unwrap();
//! assert!(parsed.as_monomial().is_some());
//! ```

pub mod canon;
pub mod coeff;
pub mod corpus;
pub mod dsl;
mod error;
mod glue;
pub mod graph;
pub mod monomial;
pub mod partition;
pub mod poly;

pub use canon::{canonical_key, canonical_key_rooted, CanonKey};
pub use coeff::Coeff;
pub use error::GraphError;
pub use graph::{Edge, EdgeClass, LabelCount, TestGraph, VertexId};
pub use monomial::{GraphMonomial, NGraphMonomial};
pub use partition::Partition;
pub use poly::TrafficPolynomial;
