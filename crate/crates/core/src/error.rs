use thiserror::Error;

/// Errors surfaced by constructors and verification entry points.
///
/// Low-level algebra operations (basis products, coproducts) treat rank or
/// field mismatches as programming errors and panic instead; everything that
/// consumes external data or can fail for mathematical reasons returns
/// `Result<_, Error>`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime (p = 2 is rejected: the structure constants divide by 2 and 4)")]
    BadModulus(u64),
    #[error("rank must be a positive integer, got {0}")]
    BadRank(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("row span is not Lagrangian")]
    NotLagrangian,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("matrix must have rank {expected}, found {found}")]
    RankDeficient { expected: usize, found: usize },
    #[error("module is not in extension shape: {0}")]
    NotExtensionShape(String),
    #[error("constructed object failed its defining axioms: {0}")]
    AxiomFailure(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
