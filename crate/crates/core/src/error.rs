//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator context mismatch")]
    ContextMismatch,

    #[error("hbar truncation order mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("duplicate generator symbol `{0}`")]
    DuplicateSymbol(String),

    #[error("generator `{0}` has degree {1}, expected degree 0")]
    NonzeroDegree(String, i64),

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("reduced coproduct is undefined for a counital coalgebra")]
    CounitalReduction,

    #[error("basis element {0} is not part of the coalgebra")]
    UnknownBasisElement(String),

    #[error("non-unital algebra context has no contracting homotopy")]
    NonUnital,

    #[error("slice has {size} basis words, exceeding the cap {cap}")]
    SliceTooLarge { size: usize, cap: usize },

    #[error("product overflows the degree bound on tuple [{0}]")]
    DegreeOverflow(String),

    #[error("cochain arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),

    #[error("deformed differential fails square-zero on {witness}")]
    SquareZeroFailure { witness: String },

    #[error("element has degree {found}, expected {expected}")]
    DegreeMismatch { expected: i64, found: i64 },

    #[error("element is not a cycle: d maps it to {0}")]
    NotACycle(String),

    #[error("unresolved overlap defect already at hbar order {0}")]
    UnresolvedLowerOrder(usize),

    #[error("polyvector context mismatch")]
    PolyContextMismatch,

    #[error("index {0} out of range for dimension {1}")]
    IndexOutOfRange(usize, usize),

    #[error("graph cap exceeded: {requested} aerial vertices, cap {cap}")]
    GraphCapExceeded { requested: usize, cap: usize },

    #[error("operator input shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
