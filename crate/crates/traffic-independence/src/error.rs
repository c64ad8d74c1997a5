use thiserror::Error;
use traffic_ensembles::EnsembleError;
use traffic_graph::GraphError;
use traffic_moments::MomentError;
use traffic_trace::TraceError;

#[derive(Debug, Error)]
pub enum IndependenceError {
    #[error("label `{0}` has no family")]
    UnassignedLabel(String),
    #[error("word is empty")]
    EmptyWord,
    #[error("no moments supplied for label `{0}`")]
    MissingMoments(String),
    #[error("need moments up to order {need} for label `{label}`")]
    ShortMoments { label: String, need: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ensemble(#[from] EnsembleError),
    #[error(transparent)]
    Moment(#[from] MomentError),
    #[error(transparent)]
    Trace(#[from] TraceError),
}
