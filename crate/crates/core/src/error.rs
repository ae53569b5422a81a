use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not an extended rational")]
    ZeroOverZero,
    #[error("{0} and {1} are not Farey neighbors")]
    NotFareyEdge(String, String),
    #[error("not hyperbolic: |trace| <= 2")]
    NotHyperbolic,
    #[error("determinant is not +1 (got {0})")]
    BadDeterminant(String),
    #[error("the ancestor of 1/0 is undefined")]
    AncestorOfInfinity,
    #[error("1/0 has no continued fraction expansion")]
    InfinityHasNoCF,
    #[error("invalid quadratic surd: {0}")]
    InvalidSurd(String),
    #[error("sequence is empty")]
    EmptySequence,
    #[error("sequence entries must be positive")]
    NonpositiveEntry,
    #[error("word is empty")]
    EmptyWord,
    #[error("word has an odd number of T/U blocks")]
    OddBlockCount,
    #[error("letter {0:?} is not T or U")]
    InvalidLetter(char),
    #[error("the two edges are equal")]
    EqualEdges,
    #[error("the two edges bound a single Farey triangle")]
    AdjacentEdges,
    #[error("cyclic type must have even length")]
    OddLength,
    #[error("trace bound must be at least 3")]
    TraceBoundTooSmall,
    #[error("no conjugacy class has dilatation below the given bound")]
    EmptyRange,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
