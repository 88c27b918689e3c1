//! The general Darboux transform on jets: from a potential u_0 and an
//! auxiliary solution φ of φ'' + (u_0 - μ²/4) φ = 0, the new potential is
//! ũ_0 = u_0 + 2 (log φ)''.

use crate::error::{Error, Result};
use crate::jets::Jet;
use crate::ring::{DiffRing, Ring};

/// Apply the Darboux potential map. `phi` must solve the auxiliary equation
/// to jet accuracy and be nonzero at the base point; the result is two jet
/// orders shorter than `phi`.
pub fn darboux_general(u0: &Jet<f64>, phi: &Jet<f64>, mu: f64) -> Result<Jet<f64>> {
    if u0.t0() != phi.t0() {
        return Err(Error::BasePointMismatch(u0.t0(), phi.t0()));
    }
    if phi.order() < 2 {
        return Err(Error::InsufficientOrder {
            need: 2,
            have: phi.order(),
        });
    }
    let scale = phi.max_abs().max(1.0);
    // verify the auxiliary equation: φ'' + (u_0 - μ²/4) φ = 0
    let shift = Jet::constant(u0.t0(), mu * mu / 4.0, u0.order());
    let residual = phi.dt().dt().add(&u0.sub(&shift).mul(phi));
    if residual.max_abs() > 1e-6 * scale {
        return Err(Error::InvalidInput(format!(
            "phi does not solve the auxiliary equation (residual {})",
            residual.max_abs()
        )));
    }
    let inv = phi
        .reciprocal()
        .ok_or_else(|| Error::NotInvertible("phi vanishes at the base point".into()))?;
    // 2 (log φ)'' = 2 d/dt (φ'/φ)
    let log_d = phi.dt().mul(&inv);
    let correction = log_d.dt();
    Ok(u0.add(&correction.add(&correction)))
}
