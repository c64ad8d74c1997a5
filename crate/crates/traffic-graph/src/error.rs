use thiserror::Error;

use crate::graph::VertexId;

/// Errors raised while building or transforming graphs and partitions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a test graph needs at least one vertex")]
    EmptyVertexSet,
    #[error("vertex {0} is referenced but not part of the graph")]
    UnknownVertex(VertexId),
    #[error("graph is not connected")]
    Disconnected,
    #[error("root counts differ: {left} versus {right}")]
    RootCountMismatch { left: usize, right: usize },
    #[error("label `{0}` has no binding")]
    UnboundLabel(String),
    #[error("graph has {vertices} vertices, above the cap of {cap}")]
    VertexCap { vertices: usize, cap: usize },
    #[error("partition does not cover the vertex set exactly")]
    PartitionMismatch,
    #[error("partition blocks must be non-empty and disjoint")]
    MalformedPartition,
    #[error("ground set of size {size} exceeds the enumeration guard {cap}")]
    PartitionGuard { size: usize, cap: usize },
    #[error("pairings need an even ground set, got {0}")]
    OddPairing(usize),
}
