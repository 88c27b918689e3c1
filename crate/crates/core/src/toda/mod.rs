//! Moments, Hankel determinants, recurrence coefficients, orthogonal and
//! associated polynomials, Stieltjes/Riccati residuals, reflection utilities
//! and the KdV density identification.
//!
//! Everything is generic over the coefficient ring: exact polynomials in t
//! and rational functions for the symbolic tracks, jets for the numeric
//! track. The canonical index convention throughout is
//!
//! ```text
//! db_k/dt = u_{k+1} - u_k,      du_k/dt = u_k (b_k - b_{k-1}),
//! ```
//!
//! the convention tied to the moment recurrence.

mod kdv;
mod moments;
mod recurrence;
mod series_checks;

pub use kdv::{kdv_densities, kdv_moment_identification, KdvReport};
pub use moments::{bilinear_residual, bilinear_residual_poly, hankel, MomentTable};
pub use recurrence::{
    associated_polynomial, op_polynomial, recurrence_exact, recurrence_from_moments,
    recurrence_from_moments_hankel, recurrence_values, reflect_extend, RecurrenceCoefficients,
};
pub use series_checks::{
    dot_p_residual, riccati_residual, schrodinger_solution, schrodinger_to_stieltjes,
    second_kind_check, stieltjes_series, RiccatiResidual, SecondKindReport,
};

/// Singularity threshold for Hankel quantities over floating coefficients,
/// relative to the cancellation gauge of the determinant. Exact coefficient
/// rings never consult the band: their zero test is `is_zero`, since exact
/// Hankel values legitimately sit far below the gauge.
pub(crate) const SINGULAR_TOL: f64 = 1e-12;
