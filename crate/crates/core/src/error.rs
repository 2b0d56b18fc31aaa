use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid ground system: {0}")]
    InvalidGround(String),

    #[error("not a separation: {0}")]
    NotASeparation(String),

    #[error("ground system has {vertices} vertices, enumeration cap is {cap}")]
    TooLarge { vertices: usize, cap: usize },

    #[error("malformed orientation: {0}")]
    MalformedOrientation(String),

    #[error("orientation violates its axioms: {0}")]
    AxiomViolation(String),

    #[error("matrix is not skew-symmetric (entry ({row}, {col}))")]
    NotSkewSymmetric { row: usize, col: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("negative entry at index {0}")]
    NegativeEntry(usize),

    #[error("invalid weight function: {0}")]
    InvalidWeights(String),

    #[error("weight value does not fit in 64 bits")]
    WeightOverflow,

    #[error("invalid rational `{0}`")]
    InvalidRational(String),

    /// A step the construction proves cannot fail did fail. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
