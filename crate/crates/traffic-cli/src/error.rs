use serde::Serialize;
use traffic_ensembles::EnsembleError;
use traffic_graph::dsl::DslError;
use traffic_graph::GraphError;
use traffic_independence::IndependenceError;
use traffic_ltd::LtdError;
use traffic_moments::{MomentError, ParseError};
use traffic_trace::TraceError;

/// A failure reported as `{"error": kind, "message": ...}` on stderr.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliError {
    /// `usage`, `input`, `guard`, `domain` or `io`.
    pub error: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            error: "usage",
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            error: "input",
            message: message.into(),
        }
    }

    fn guard(message: impl Into<String>) -> Self {
        CliError {
            error: "guard",
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        CliError {
            error: "domain",
            message: message.into(),
        }
    }

    pub fn record(&self) -> String {
        serde_json::to_string(self).expect("error records serialize")
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.error, self.message)
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError {
            error: "io",
            message: e.to_string(),
        }
    }
}

impl From<DslError> for CliError {
    fn from(e: DslError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::VertexCap { .. } | GraphError::PartitionGuard { .. } => {
                CliError::guard(e.to_string())
            }
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<LtdError> for CliError {
    fn from(e: LtdError) -> Self {
        match e {
            LtdError::OrderingCap { .. } | LtdError::CountGuard { .. } => {
                CliError::guard(e.to_string())
            }
            LtdError::Graph(g) => g.into(),
            _ => CliError::domain(e.to_string()),
        }
    }
}

impl From<MomentError> for CliError {
    fn from(e: MomentError) -> Self {
        match e {
            MomentError::OrderGuard { .. } => CliError::guard(e.to_string()),
            MomentError::Ltd(l) => l.into(),
            MomentError::Graph(g) => g.into(),
            MomentError::Parse(p) => p.into(),
            _ => CliError::domain(e.to_string()),
        }
    }
}

impl From<TraceError> for CliError {
    fn from(e: TraceError) -> Self {
        match e {
            TraceError::ContractionBudget { .. } => CliError::guard(e.to_string()),
            TraceError::Graph(g) => g.into(),
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<EnsembleError> for CliError {
    fn from(e: EnsembleError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<IndependenceError> for CliError {
    fn from(e: IndependenceError) -> Self {
        match e {
            IndependenceError::Graph(g) => g.into(),
            IndependenceError::Moment(m) => m.into(),
            IndependenceError::Trace(t) => t.into(),
            IndependenceError::Ensemble(x) => x.into(),
            _ => CliError::input(e.to_string()),
        }
    }
}
