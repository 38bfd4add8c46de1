use thiserror::Error;

use crate::graph::{Edge, VertexId};

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("graph has {0} vertex; at least 2 are required")]
    TooSmall(usize),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    Loop(VertexId),
    #[error("parallel edge {0}")]
    ParallelEdge(Edge),
    #[error("edge {0} is not in the graph")]
    EdgeNotFound(Edge),
    #[error("invalid graph JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error)]
pub enum ConnectivityError {
    #[error("graph has {order} vertices; {k}-connectivity needs more than {k}")]
    TooSmall { order: usize, k: usize },
    #[error("graph is not planar")]
    NonPlanar,
    #[error("graph is not 2-connected")]
    NotBiconnected,
}

#[derive(Debug, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("precondition failed: graph is {0}")]
    Precondition(&'static str),
    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),
    #[error("no reduction step found for a graph satisfying all preconditions ({order} vertices)")]
    NoReduction { order: usize },
}

impl ReductionError {
    /// True when the error signals a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, ReductionError::NoReduction { .. })
    }
}

#[derive(Debug, Error)]
pub enum RigidityError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("base edge {0} is not in the graph")]
    BaseEdgeAbsent(Edge),
    #[error("missing dimension for edge {0}")]
    MissingDimension(Edge),
    #[error("dimension for edge {edge} must be nonnegative, got {value}")]
    NegativeDimension { edge: Edge, value: String },
    #[error("base edge dimension must be 1, got {0}")]
    BaseDimension(String),
    #[error("malformed dimension {key:?}: {reason}")]
    MalformedDimension { key: String, reason: String },
    #[error("constraint system is not square: {polys} polynomials in {vars} variables")]
    NotSquare { polys: usize, vars: usize },
    #[error("invalid dimensioned graph JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("polynomial has degree 0 in {0}")]
    ConstantInVariable(String),
    #[error("variable registries differ")]
    RegistryMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("division is not exact")]
    InexactDivision,
    #[error("polynomial is reducible over the rationals")]
    Reducible,
    #[error("polynomial degree {0} is below the supported minimum")]
    DegreeTooSmall(usize),
    #[error("polynomial is not univariate")]
    NotUnivariate,
}

#[derive(Debug, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum EliminationError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rigidity(#[from] RigidityError),
    #[error("not a doublet system: {0}")]
    WrongShape(String),
    #[error("dimension for edge {0} is not integral after squaring")]
    NonIntegralDimension(Edge),
    #[error("expected 8 dimensions, got {0}")]
    DimensionCount(usize),
    #[error("degree drop at {stage}: deg({poly}, {var}) is {generic} generically but {specialized} after specialization")]
    DegreeDrop {
        stage: String,
        poly: String,
        var: String,
        generic: usize,
        specialized: usize,
    },
    #[error("stored certificate does not match recomputation: {0}")]
    CertificateMismatch(String),
    #[error("invalid certificate JSON: {0}")]
    Json(#[from] serde_json::Error),
}
