use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("hypergraph must have at least one vertex")]
    EmptyVertexSet,
    #[error("edge {edge} contains vertex {vertex}, but n = {n}")]
    EdgeOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("edge {0} is empty")]
    EmptyEdge(usize),
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("edge {second} duplicates edge {first}")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edge {edge} has {len} vertices, expected {k}")]
    WrongEdgeSize { edge: usize, len: usize, k: usize },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {index} out of range (m = {m})")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("hypergraph is not uniform")]
    NotUniform,
    #[error("hypergraph is disconnected")]
    Disconnected,

    #[error("power iteration did not converge: residual {residual:e} after {iterations} iterations")]
    NoConvergence { residual: f64, iterations: usize },
    #[error("vector is not unit length (norm {0})")]
    NotUnit(f64),
    #[error("vector length {got} does not match dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("(n - 1) = {} is not divisible by (k - 1) = {}", .n.saturating_sub(1), .k.saturating_sub(1))]
    BadDivisibility { n: usize, k: usize },
    #[error("edge size k must be at least 2, got {0}")]
    BadEdgeSize(usize),
    #[error("maximum degree {delta} not in 1..={max}")]
    BadDelta { delta: usize, max: usize },
    #[error("instance too small: {0}")]
    TooSmall(String),
    #[error("parameter a = {a} not in 1..={max}")]
    BadA { a: usize, max: usize },
    #[error("anchor edge {0} needs k-1 vertices of degree 1 and one of degree >= 2")]
    BadAnchorDegrees(usize),
    #[error("s = {s} not in 0..={max}")]
    BadS { s: usize, max: usize },
    #[error("expected {expected} attached parts, got {got}")]
    PartCountMismatch { expected: usize, got: usize },
    #[error("unknown family kind `{0}`")]
    UnknownFamily(String),
    #[error("missing family parameter `{0}`")]
    MissingParameter(String),
    #[error("invalid family parameter `{name}` = {value}")]
    InvalidParameter { name: String, value: i64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("moving edges makes edge {0} a duplicate")]
    ResultingDuplicateEdge(usize),
    #[error("deleting edge {edge} leaves {got} components, expected {expected}")]
    ComponentHypothesisFailed { edge: usize, got: usize, expected: usize },

    #[error("enumeration too large: {0}")]
    EnumerationTooLarge(String),
    #[error("no sign change found while bracketing the largest root")]
    NoRootFound,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
