use thiserror::Error;

/// Errors raised by every fallible operation of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge weight {0} is negative")]
    NegativeWeight(String),
    #[error("empty edge")]
    EmptyEdge,
    #[error("vertex {0} repeated inside one edge")]
    RepeatedVertex(usize),
    #[error("edge {0:?} is a loop; matrix builders need |e| >= 2")]
    LoopEdge(Vec<usize>),
    #[error("vertex {0} is isolated (zero valency)")]
    IsolatedVertex(usize),
    #[error("hypergraph repeats the vertex set {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("hypergraph is not regular")]
    NotRegular,
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrices {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("family member {0:?} lies inside a single class")]
    MemberInsideClass(Vec<usize>),
    #[error("family member {0:?} uses a vertex outside the class sequence")]
    UnknownVertex(Vec<usize>),
    #[error("family member {0:?} misses a class of its backbone edge")]
    MemberMissesClass(Vec<usize>),
    #[error("family would have {0} members, above the limit {1}")]
    FamilyTooLarge(u128, u128),
    #[error("classes overlap or repeat vertex {0}")]
    OverlappingClasses(usize),
    #[error("pair counts are not constant: {0}")]
    NonConstantCounts(String),
    #[error("cross edges of cardinality {0} carry unequal weights")]
    UnrepresentableWeights(usize),
    #[error("row value {0} is not an eigenvalue of its block")]
    MissingRowSum(String),
    #[error("enumeration too large: {0}")]
    EnumerationTooLarge(String),
    #[error("inputs are not cospectral constituents: {0}")]
    NotCospectral(String),
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
