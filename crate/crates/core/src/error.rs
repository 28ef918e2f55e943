use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("graph6 bit vector truncated: expected {expected} bytes, found {found}")]
    TruncatedBitVector { expected: usize, found: usize },
    #[error("graph6 data has {0} unexpected trailing bytes")]
    TrailingBytes(usize),
    #[error("non-printable byte {byte:#04x} at offset {offset}")]
    NonPrintableByte { byte: u8, offset: usize },
    #[error("edge list parse error on line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("alpha must lie in [0, 1], got {0}")]
    InvalidAlpha(f64),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix order {0} exceeds the supported limit for characteristic polynomials")]
    OrderTooLarge(usize),
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("polynomial of degree {degree} has {missing} non-real roots")]
    ComplexRootsDetected { degree: usize, missing: usize },
    #[error("division by the zero rational function")]
    DivisionByZeroFunction,
    #[error("evaluation point lies within tolerance of the pole at {pole}")]
    PoleProximity { pole: f64 },
    #[error("complete bipartite fast path disagrees with the general coronal at x = {x}")]
    FastPathMismatch { x: f64 },
    #[error("first factor must have at least one vertex")]
    EmptyG1,
    #[error("first factor must have at least one edge")]
    NoEdgesInG1,
    #[error("graph must have at least one edge")]
    NoEdges,
    #[error("{0} is not regular")]
    NotRegular(&'static str),
    #[error("complete bipartite parts must differ (a = b = {0})")]
    PartsEqual(usize),
    #[error("graphs have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("inadmissible family recipe: {0}")]
    InadmissibleRecipe(String),
}
