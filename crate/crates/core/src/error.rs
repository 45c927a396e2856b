use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HedgeError {
    #[error("a hedge graph needs at least one vertex")]
    NoVertices,
    #[error("edge {edge}: vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("vertex {vertex} out of range for n={n}")]
    UnknownVertex { vertex: usize, n: usize },
    #[error("edge {edge}: loop at vertex {vertex} in simple input")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge}: duplicates edge {first} between {u} and {v}")]
    DuplicateEdge {
        edge: usize,
        first: usize,
        u: usize,
        v: usize,
    },
    #[error("edge {edge}: invalid label {label:?} (must be a non-empty token without whitespace)")]
    InvalidLabel { edge: usize, label: String },
    #[error("graph on {n} vertices has no edges")]
    EmptyEdgeList { n: usize },
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("edge index {edge} out of range ({m} edges)")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("edge {edge} is a loop and cannot be contracted")]
    LoopContraction { edge: usize },
    #[error("hedge adjacency is defined for two distinct labels")]
    SameLabel,
    #[error("contraction order is not a permutation of the label set")]
    NotAPermutation,
    #[error("operation needs at least {needed} vertices, graph has {n}")]
    TooFewVertices { needed: usize, n: usize },
    #[error("{labels} labels exceed the brute-force cap of {cap}")]
    LabelCapExceeded { labels: usize, cap: usize },
    #[error("label {label} has {edges} edges; the edge-connectivity path needs exactly one per label")]
    NotOneEdgePerLabel { label: String, edges: usize },
    #[error("randomized connectivity needs at least one trial")]
    NoTrials,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("infeasible generator parameters: {0}")]
    InfeasibleParams(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed verdict record: {0}")]
    MalformedRecord(String),
}

pub type Result<T> = std::result::Result<T, HedgeError>;
