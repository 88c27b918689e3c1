//! Error type shared by all modules.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A Hankel determinant vanished (identically, or below tolerance at the
    /// evaluation point) where the construction needs it invertible.
    #[error("singular Hankel determinant H_{n}")]
    SingularHankel { n: usize },

    #[error("element not invertible: {0}")]
    NotInvertible(String),

    #[error("insufficient series/jet order: need {need}, have {have}")]
    InsufficientOrder { need: usize, have: usize },

    #[error("mismatched jet base points: {0} vs {1}")]
    BasePointMismatch(f64, f64),

    #[error("potential has a pole at t0 = {0}")]
    PotentialPole(f64),

    #[error("coefficient window does not cover index {0}")]
    WindowTooShort(i64),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("root finding failed: {0}")]
    RootFinding(String),

    #[error("roots closer than the gap tolerance near t = {0}")]
    RootCollision(f64),

    #[error("eigenvalue paths collided near t = {0}")]
    EigenvalueCollision(f64),

    #[error("off-diagonal entry u_{index} = {value} is not positive")]
    NonpositiveOffDiagonal { index: usize, value: f64 },

    #[error("integrator step size underflow at t = {0}")]
    StepSizeUnderflow(f64),

    #[error("eigensolver failed to converge")]
    EigNoConvergence,

    #[error("io error: {0}")]
    Io(String),
}
