use thiserror::Error;

/// Errors raised by the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order mismatch: expected order {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },

    #[error("a binary form needs at least one coefficient")]
    EmptyForm,

    #[error("expected at least one form")]
    EmptyList,

    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("singular matrix: determinant is zero")]
    SingularMatrix,

    #[error("the forms are linearly dependent")]
    DependentForms,

    #[error("combinant vector is identically zero")]
    ZeroCombinants,

    #[error("invalid combinant slot {q} for (r, d) = ({r}, {d})")]
    InvalidSlot { q: usize, r: usize, d: usize },

    #[error("combinant slot {q} is missing")]
    MissingSlot { q: usize },

    #[error("shape mismatch: (r, d) = ({r1}, {d1}) vs ({r2}, {d2})")]
    ShapeMismatch {
        r1: usize,
        d1: usize,
        r2: usize,
        d2: usize,
    },

    #[error("not in the image: kernel of psi has dimension {kernel_dim}, expected {r}")]
    NotInImage { kernel_dim: usize, r: usize },

    #[error("target is outside the span of the candidates")]
    OutsideSpan,

    #[error("linear system has no unique solution: {0}")]
    Unsolvable(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("malformed rational number {0:?}")]
    BadRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
