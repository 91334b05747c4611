use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    Empty,
    #[error("generator {0} is not positive")]
    NonPositive(i64),
    #[error("gcd is {gcd}")]
    GcdNotOne { gcd: i64 },
    #[error("generator {generator} is a combination of the other generators")]
    NotMinimal { generator: i64 },
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    #[error("{0} is not a positive element of the semigroup")]
    NotAnElement(i64),
    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: i64, len: i64 },
    #[error("precondition of {formula} failed: {reason}")]
    PreconditionFailed {
        formula: &'static str,
        reason: String,
    },
    #[error("expected an embedding dimension 3 semigroup, got {0} generators")]
    NotThreeGenerated(usize),
    #[error("semigroup is symmetric; its defining ideal has no Herzog matrix")]
    SymmetricInput,
    #[error("no unique positive decomposition of {degree} over ({left}, {right})")]
    NoPositiveDecomposition { degree: i64, left: i64, right: i64 },
    #[error("beta' * n2 equals alpha * n1 ({0}); no case applies")]
    TieUndefined(i64),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl Error {
    pub(crate) fn precondition(formula: &'static str, reason: impl Into<String>) -> Self {
        Error::PreconditionFailed {
            formula,
            reason: reason.into(),
        }
    }

    pub(crate) fn overflow(what: impl Into<String>) -> Self {
        Error::Overflow(what.into())
    }
}
