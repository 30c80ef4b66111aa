use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range for {what} of size {size}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },

    #[error("a pair needs two distinct indices, got ({0}, {0})")]
    DegeneratePair(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("negative distance entry {value} at pair {pair}")]
    NegativeDistance { pair: String, value: String },

    #[error("zero mass at index {0} has no inverse")]
    ZeroMass(usize),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {gap:e}")]
    NotSymmetric { i: usize, j: usize, gap: f64 },

    #[error("distances lie outside the Euclidean distance cone (eigenvalue {min_eigenvalue:e})")]
    OutsideCone { min_eigenvalue: f64 },

    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),

    #[error("symbolic size n = {n} exceeds the cap {cap} (raise it with --long-running or NBODY_MAX_SYMBOLIC_N)")]
    CapExceeded { n: usize, cap: usize },

    #[error("unsupported size n = {n}: {reason}")]
    UnsupportedSize { n: usize, reason: &'static str },

    #[error("bordered matrix C_S is nonsingular at the given point (det = {0})")]
    NonsingularBordered(String),

    #[error("identity check failed: {0}")]
    IdentityFailed(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
