//! Exact limiting traffic distributions.
//!
//! Each evaluator maps a test graph `T` to `lim E τ⁰[T]` for a family of
//! random matrices:
//!
//! * Wigner matrices: supported on colored double trees, see
//!   [`wigner_ltd`] and [`ordering_sum_ltd`] for complex pseudo-variances.
//! * Band matrices in the slow, full, periodic and proportional regimes:
//!   [`rbm_ltd`], which reduces to exact piecewise-polynomial integrals.
//! * Band matrices with a fixed width: [`fixed_band_ltd`], an estimate built
//!   from exact labeling counts.
//! * Haar orthogonal matrices: [`haar_ltd`], supported on orthogonal cacti.
//!
//! ```
//! use std::collections::BTreeMap;
//! use traffic_graph::{coeff::ratio, Edge, TestGraph};
//! use traffic_ltd::p_t;
//!
//! let star = TestGraph::from_edges(vec![
//!     Edge::new(0, 1, "x"), Edge::new(1, 0, "x"),
//!     Edge::new(0, 2, "x"), Edge::new(2, 0, "x"),
//! ]).unwrap();
//! let c = BTreeMap::from([("x".to_string(), ratio(1, 2))]);
//! assert_eq!(p_t(&star, &c).unwrap(), ratio(28, 27));
//! ```

mod closed_form;
mod double_tree;
mod error;
mod evaluator;
mod fixed_band;
mod haar;
pub mod piecewise;
mod proportional;
mod wigner;

pub use closed_form::{degree_moment, p_s_closed, p_t_star_closed};
pub use double_tree::{classify_double_tree, DoubleTreeReport, Pad, PadKind, Witness};
pub use error::LtdError;
pub use evaluator::{HaarLtd, LtdEvaluator, RbmLtd, WignerLtd};
pub use fixed_band::{
    count_bound, fixed_band_count, fixed_band_ltd, moment_factor, EntryMoments, FixedBandEstimate,
    COUNT_GUARD,
};
pub use haar::{classify_orthogonal_cactus, haar_ltd, CactusReport};
pub use piecewise::PiecewisePoly;
pub use proportional::{
    cut_integral, forest_transform, norm_factor, p_t, rbm_ltd, Regime, RegimeAssignment,
};
pub use wigner::{ordering_sum_ltd, wigner_ltd, Betas, ORDERING_CAP};
