use alloc::string::String;

use crate::factor::Diagnosis;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("indices must be distinct")]
    EqualIndices,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("operation requires a field")]
    NotAField,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("matrix is not idempotent")]
    NotIdempotent,
    #[error("matrix is not triangular")]
    NotTriangular,
    #[error("matrix is not a quasi {0} matrix")]
    NotQuasi(&'static str),
    #[error("matrix is neither elementary nor a permutation matrix")]
    NotElementaryOrPermutation,
    #[error("row {0} is not zero")]
    RowNotZero(usize),
    #[error("column {0} is not zero")]
    ColumnNotZero(usize),
    #[error("matrix is not of padded form")]
    NotPadded,
    #[error("padding must be at least 1")]
    ZeroPadding,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no factorization route applies: {0}")]
    RouteNotFound(String),
    #[error("factorization does not verify: {0}")]
    Unverified(Diagnosis),
    #[error("space of {cardinality} matrices exceeds the budget of {budget}")]
    BudgetExceeded { cardinality: u128, budget: u64 },
    #[error("unsupported ring for this operation: {0}")]
    UnsupportedRing(&'static str),
    #[error("matrix has a negative entry")]
    NegativeEntry,
}
