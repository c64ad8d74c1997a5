use thiserror::Error;
use traffic_ensembles::EnsembleError;
use traffic_graph::GraphError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TraceError {
    #[error("label `{0}` has no matrix")]
    UnboundLabel(String),
    #[error("matrix dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("no matrices were supplied")]
    NoMatrices,
    #[error("contraction at n = {n} would condition on {conditioned} vertices, over budget")]
    ContractionBudget { n: usize, conditioned: usize },
    #[error("moment order must be positive and even, got {0}")]
    OddOrder(u32),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ensemble(#[from] EnsembleError),
}
