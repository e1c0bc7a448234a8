use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("non-finite floating-point entry")]
    NonFinite,

    #[error("a quadratic map needs at least one component of positive dimension")]
    EmptyMap,

    #[error("not a quadratic harmonic morphism: {0}")]
    NotHarmonicMorphism(String),

    #[error("map is not horizontally weakly conformal")]
    NotConformal,

    #[error("map is not umbilical (positive eigenvalues {0:?})")]
    NotUmbilical(Vec<f64>),

    #[error("map is Q-singular (rank {rank} < dimension {dim})")]
    QSingular { rank: usize, dim: usize },

    #[error("scale factor must be nonzero")]
    ZeroScale,

    #[error("common eigenvalue {0} has no exact square root; convert the map to floating point")]
    IrrationalScale(String),

    #[error("orthogonal multiplications exist only for n = 1, 2, 4, 8 (got {0})")]
    UnsupportedDimension(usize),

    #[error("expected a map R^{expected_m} -> R^{expected_n}, got R^{m} -> R^{n}")]
    WrongShape { expected_m: usize, expected_n: usize, m: usize, n: usize },

    #[error("Clifford system must act on an even-dimensional space (got {0})")]
    OddDimension(usize),

    #[error("matrices do not satisfy the Clifford relations")]
    NotClifford,

    #[error("Clifford systems have different member counts ({0} vs {1})")]
    CountMismatch(usize, usize),

    #[error("dimension {dim} is not a multiple of the irreducible dimension {irreducible}")]
    MalformedSystem { dim: usize, irreducible: usize },

    #[error("Clifford index must be at least 1")]
    ZeroCliffordIndex,

    #[error("Jacobi eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("invalid numeric token `{0}`")]
    BadToken(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
