use thiserror::Error;

/// Errors raised by the bicomplex frame toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero divisor: idempotent components ({alpha_abs:e}, {beta_abs:e}) have a vanishing entry")]
    ZeroDivisor { alpha_abs: f64, beta_abs: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("length mismatch: expected {expected} coefficients, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("samples live on different quadrature grids")]
    GridMismatch,
    #[error("family is not a frame (smallest component bounds a+ = {a_plus:e}, a- = {a_minus:e})")]
    NotAFrame { a_plus: f64, a_minus: f64 },
    #[error("operator is not invertible (smallest component eigenvalues {lambda_plus:e}, {lambda_minus:e})")]
    NotInvertible { lambda_plus: f64, lambda_minus: f64 },
    #[error("index ({n}, {m}) out of range for lattice of size ({n_max}, {m_max})")]
    IndexOutOfRange { n: usize, m: usize, n_max: usize, m_max: usize },
    #[error("Hermite order {order} exceeds cap {cap}")]
    OrderTooHigh { order: usize, cap: usize },
    #[error("quadrature too coarse: Hermite orthonormality residual {residual:e} > {limit:e}")]
    QuadratureTooCoarse { residual: f64, limit: f64 },
    #[error("incompatible lattice: {0}")]
    IncompatibleLattice(String),
    #[error("empty sequence: {0}")]
    EmptySequence(&'static str),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
