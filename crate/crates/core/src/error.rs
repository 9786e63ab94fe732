use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge ({0}, {0}) is not allowed in a simple graph")]
    LoopEdge(usize),

    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("vertex {0} is isolated; every component must contain an edge")]
    IsolatedVertex(usize),

    #[error("non-trivial graph required: component {component:?} has {edges} edge(s)")]
    TrivialComponent { component: Vec<usize>, edges: usize },

    #[error("graph with {n} vertices is too large for exact canonicalization (cap {cap})")]
    TooLargeForCanonical { n: usize, cap: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph6 cannot encode {0} vertices")]
    Graph6Size(usize),

    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("subdivision granularity must be 2, 4 or 8, got {0}")]
    InvalidGranularity(usize),

    #[error(
        "component with {n} vertices exceeds the exact hyperbolicity cap {cap}; use the m/4 upper bound {upper_bound} instead"
    )]
    HyperbolicityCap {
        n: usize,
        cap: usize,
        upper_bound: String,
    },

    #[error("internal enumeration supports at most {cap} vertices (asked for {n}); read graphs from a graph6 file instead")]
    EnumerationCap { n: usize, cap: usize },

    #[error("unknown index `{name}`; valid names are: {valid}")]
    UnknownIndex { name: String, valid: String },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),

    #[error("json output failed: {0}")]
    Json(#[from] serde_json::Error),
}
