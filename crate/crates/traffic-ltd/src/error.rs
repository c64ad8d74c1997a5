use thiserror::Error;
use traffic_graph::GraphError;

use crate::double_tree::Witness;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LtdError {
    #[error("no β given for label `{0}`")]
    MissingBeta(String),
    #[error("β for label `{0}` is not real; use the ordering-sum evaluator")]
    NonRealBeta(String),
    #[error("no regime given for label `{0}`")]
    MissingRegime(String),
    #[error("label `{0}` has a fixed band width; use the fixed-band evaluator")]
    FixedRegime(String),
    #[error("no proportion given for label `{0}`")]
    MissingProportion(String),
    #[error("proportion {value} for label `{label}` is outside (0, 1]")]
    InvalidProportion { label: String, value: String },
    #[error("not a colored double tree: {0}")]
    NotDoubleTree(Witness),
    #[error("skeleton of the test graph is not a tree")]
    SkeletonNotTree,
    #[error("ordering sum over {vertices} vertices exceeds the cap of {cap}")]
    OrderingCap { vertices: usize, cap: usize },
    #[error("parameter out of domain: {0}")]
    OutOfDomain(String),
    #[error("no band width given for label `{0}`")]
    MissingWidth(String),
    #[error("band-constrained enumeration needs about {work:.3e} steps, above the guard")]
    CountGuard { work: f64 },
    #[error("moment of order {order} is not declared for label `{label}`")]
    MissingMoment { label: String, order: usize },
    #[error("the Haar orthogonal evaluator takes a single label, found {0}")]
    MultipleLabels(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
