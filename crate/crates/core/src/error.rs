use crate::qscalar::ScalarError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("operation needs an element of the Hopf algebra, got a localized element")]
    NotInHopfDomain,
    #[error("element is not in the Podles subalgebra: {0}")]
    NotInSubalgebra(String),
    #[error("requested level {requested} exceeds cutoff {cutoff}")]
    CutoffExceeded { requested: String, cutoff: String },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityError { expected: usize, got: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
