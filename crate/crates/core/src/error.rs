use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable universes differ: {left} vs {right}")]
    UniverseMismatch { left: String, right: String },

    #[error("variable {var} does not exist in universe {universe}")]
    UnknownVariable { var: String, universe: String },

    /// An exact division left a nonzero remainder. In a verification run this
    /// means an identity that must hold failed at the algebra level.
    #[error("division is not exact; remainder {remainder}")]
    DivisionNotExact { remainder: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not symmetric in t under {transposition}")]
    NotSymmetric { transposition: String },

    #[error("shape {shape:?} does not fit {k} variables")]
    ShapeMismatch { shape: Vec<usize>, k: usize },

    #[error("subsets {left} and {right} are not comparable ({reason})")]
    SubsetMismatch {
        left: String,
        right: String,
        reason: String,
    },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("invalid position {position} for n = {n}")]
    InvalidPosition { position: usize, n: usize },

    #[error("matrix is singular at pivot {0}")]
    SingularMatrix(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
