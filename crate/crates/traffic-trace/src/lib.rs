//! Exact evaluation of test graphs on matrices.
//!
//! [`trace_test_graph`] sums a test graph over all labelings of its vertices
//! and [`eval_graph_matrix`] keeps the two roots of a monomial free. Both run
//! in `O(n³)` per eliminated vertex on the graphs of interest. Injective
//! traces go through the Möbius expansion in [`mobius_expansion`], which is
//! cached per isomorphism class. Monte Carlo drivers share samples between
//! graphs and are reproducible from a seed regardless of the thread count.
//!
//! ```
//! use std::collections::BTreeMap;
//! use traffic_ensembles::Matrix;
//! use traffic_graph::GraphMonomial;
//! use traffic_trace::{trace_injective, trace_test_graph};
//!
//! let n = 6;
//! let ones = Matrix::from_real(n, vec![1.0; n * n]);
//! let mats = BTreeMap::from([("x".to_string(), ones)]);
//! let edge = GraphMonomial::edge("x").to_ngraph().graph().clone();
//! assert_eq!(trace_test_graph(&edge, &mats).unwrap().re, 36.0);
//! assert_eq!(trace_injective(&edge, &mats).unwrap().re, 30.0);
//! ```

mod engine;
mod error;
mod injective;
mod monte_carlo;

pub use engine::{eval_graph_matrix, trace_test_graph, Bindings, CONDITIONING_BUDGET};
pub use error::TraceError;
pub use injective::{mobius_expansion, trace_injective, MobiusExpansion, TraceSession};
pub use monte_carlo::{
    central_moment_estimate, estimate_many, estimate_traffic_state, log_log_slope, pairwise_sum,
    per_sample, Estimate,
};
