use thiserror::Error;

/// Errors raised by the algebra, lattice and instance layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("singular matrix: {0}")]
    Singular(String),

    /// Mismatched ambient variable counts or coefficient fields, or an
    /// operation outside what the value supports.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("cone is not pointed; it contains the line spanned by {direction:?}")]
    Lineality { direction: Vec<i64> },

    #[error("monomials are algebraically dependent: exponent matrix has rank {rank} < {count}")]
    Dependent { rank: usize, count: usize },

    #[error("invalid instance: {0}")]
    Validation(String),

    /// A hypothesis such as condition (*) does not hold for the data.
    #[error("condition fails: {0}")]
    Condition(String),

    #[error("grading error: {0}")]
    Grading(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
