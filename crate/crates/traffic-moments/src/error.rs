use thiserror::Error;
use traffic_graph::GraphError;
use traffic_ltd::LtdError;

use crate::parse::ParseError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MomentError {
    #[error("moment order {order} exceeds the guard {cap}")]
    OrderGuard { order: usize, cap: usize },
    #[error("polynomial is not centered: its first moment is {0}")]
    NotCentered(String),
    #[error("moment has a non-zero imaginary part")]
    NotReal,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Ltd(#[from] LtdError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
