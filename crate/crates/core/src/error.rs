use thiserror::Error;

/// Errors surfaced by the matrix kernel and the checkers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian: max deviation {deviation:.3e} exceeds tolerance {tolerance:.3e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:.6e} below clamp floor {floor:.6e}")]
    NotPsd { eigenvalue: f64, floor: f64 },

    #[error("matrix is not positive definite: smallest eigenvalue {eigenvalue:.6e}")]
    NotPd { eigenvalue: f64 },

    #[error("complex power of a singular matrix requires Re(z) > 0 or z = 0, got z = {re}{im:+}i")]
    SingularNegativePower { re: f64, im: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal mass {off:.3e})")]
    NonConvergence { sweeps: usize, off: f64 },

    #[error("Schatten exponent must satisfy p >= 1, got {0}")]
    InvalidP(f64),

    #[error("Ky Fan index must satisfy 1 <= k <= n, got k = {k} for n = {n}")]
    InvalidKyFanIndex { k: usize, n: usize },

    #[error("Hoelder exponents do not satisfy 1/p + 1/q = 1/s: residual {0:.3e}")]
    ExponentMismatch(f64),

    #[error("Araki-Lieb-Thirring exponent must satisfy r >= 2, got {0}")]
    InvalidR(f64),

    #[error("grid real range [{re_min}, {re_max}] leaves the strip [0.25, 0.75]")]
    GridOutOfStrip { re_min: f64, re_max: f64 },

    #[error("t = {0} outside the proved range [0.25, 0.75]")]
    TOutOfRange(f64),

    #[error("t = {0} outside [0, 1]")]
    TOutOfUnit(f64),

    #[error("unknown builtin example id: {0}")]
    UnknownId(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("invalid matrix file: {0}")]
    InvalidMatrixFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
