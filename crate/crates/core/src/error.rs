use thiserror::Error;

use crate::families::Finding;
use crate::graph::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid {family} parameters: {reason}")]
    InvalidParameters {
        family: &'static str,
        reason: String,
    },

    #[error("labeled enumeration of order {order} exceeds the cap of {cap}")]
    EnumerationCap { order: usize, cap: usize },

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("line {line}: {source}")]
    Ingest { line: usize, source: Graph6Error },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("coloring covers {coloring} vertices but the graph has {graph}")]
    VertexMismatch { coloring: usize, graph: usize },

    #[error("search aborted after exceeding the node limit of {0}")]
    NodeLimitExceeded(u64),

    #[error("construction not applicable: {}", .0.verdict)]
    ConstructionNotApplicable(Box<Finding>),

    #[error("class {class} with part counts {counts:?} fits none of the tripartite class types")]
    UnclassifiableClass { class: usize, counts: [usize; 3] },

    #[error("no nonnegative solution of n = 3m + 2r, m + r = {target} for n = {n}")]
    NoThresholdSolution { n: usize, target: usize },

    #[error("order {n} is outside the range where {what} is stated")]
    OrderOutOfRange { n: usize, what: &'static str },

    #[error("unknown {kind} `{value}`")]
    Unknown { kind: &'static str, value: String },

    #[error("cannot start worker pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
