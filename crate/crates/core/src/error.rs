use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("dimension mismatch: expected ambient dimension {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is the whole ambient space, no complement vector exists")]
    NoComplement,
    #[error("claimed subspace is not contained in the larger space")]
    NotASubspace,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{name}` has degree {degree}, but degrees must be at least {min}")]
    DegreeTooSmall { name: String, degree: u32, min: u32 },
    #[error("malformed differential on `{generator}`: expected degree {expected}, found {found}")]
    MalformedDifferential { generator: String, expected: i64, found: i64 },
    #[error("differential on `{0}` is not homogeneous")]
    InhomogeneousDifferential(String),
    #[error("the differential does not square to zero on `{0}`")]
    DifferentialNotSquareZero(String),
    #[error("degree {requested} exceeds the truncation cap {cap}")]
    CapExceeded { requested: u32, cap: u32 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal independence check failed: {0}")]
    IndependenceFailure(String),
    #[error("construction contradiction: {0}")]
    ConstructionContradiction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
