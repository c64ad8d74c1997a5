//! Exact limiting moments of graph polynomials.
//!
//! A moment `lim E (1/n) tr a^m` of a graph polynomial `a` is computed by
//! substituting `a` into every edge of the directed `m`-cycle and summing a
//! limit evaluator over all quotients of each resulting test graph. When the
//! evaluator vanishes off colored double trees, only the quotients that are
//! double trees are generated.
//!
//! ```
//! use traffic_graph::coeff::rat;
//! use traffic_moments::markov_moments;
//!
//! assert_eq!(markov_moments(&rat(1), &rat(-1), 2).unwrap(), rat(2));
//! ```

mod error;
mod free;
mod moment;
mod parse;
mod quotient;

pub use error::MomentError;
pub use free::{
    free_cumulants, hankel_psd, moments_from_free_cumulants, noncrossing_partitions,
    semicircle_plus_gaussian,
};
pub use moment::{
    clt_alpha_split, markov_moments, markov_polynomial, moment_sequence, traffic_moment, MAX_ORDER,
};
pub use parse::{parse_polynomial, ParseError};
pub use quotient::{double_tree_partitions, QuotientSum};
