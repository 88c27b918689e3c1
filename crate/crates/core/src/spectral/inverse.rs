//! Inverse spectral problems: Jacobi matrices from discrete weights, from a
//! symmetric spectrum (persymmetric case), and from the half-spectrum with
//! τ-parameters (per-skew case).
//!
//! The τ route fixes the values of the orthonormal end polynomial at the
//! lower half of the spectrum, closes the upper half through the product law
//! π_{N-1}(x_s) π_{N-1}(x_{N-s-1}) = 1, recovers the monic P_{N-1} by
//! Lagrange interpolation (its leading coefficient pins h_{N-1}), and then
//! descends the three-term recurrence by Euclidean division of P_N = Ω by
//! P_{N-1}. The descent is run in exact rational arithmetic when the inputs
//! are rational, in binary64 otherwise.

use crate::error::{Error, Result};
use crate::exact::poly::{Poly, Var};
use crate::exact::rational::ExactRational;
use crate::ring::{DivRing, Ring};

use super::{JacobiMatrix, SpectralData};

/// Parity of the per-skew reconstruction: even size 2m (spectrum ±x_half) or
/// odd size 2m+1 (adds the eigenvalue 0).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

/// Discrete Stieltjes procedure: the unique Jacobi matrix whose
/// eigendecomposition reproduces the given nodes and weights.
pub fn inverse_from_weights(sd: &SpectralData) -> Result<JacobiMatrix> {
    let n = sd.len();
    let gap_tol = 1e-12 * sd.x.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    for pair in sd.x.windows(2) {
        if (pair[1] - pair[0]).abs() <= gap_tol {
            return Err(Error::InvalidInput(format!(
                "duplicate nodes {} and {}",
                pair[0], pair[1]
            )));
        }
    }
    let mut b = Vec::with_capacity(n);
    let mut u = Vec::with_capacity(n.saturating_sub(1));
    let mut p_prev = vec![0.0f64; n];
    let mut p: Vec<f64> = vec![1.0; n];
    let mut h_prev = 0.0f64;
    for k in 0..n {
        let h: f64 = (0..n).map(|s| sd.w[s] * p[s] * p[s]).sum();
        if k >= 1 {
            let uk = h / h_prev;
            if uk <= 0.0 {
                return Err(Error::NonpositiveOffDiagonal {
                    index: k,
                    value: uk,
                });
            }
            u.push(uk);
        }
        let xh: f64 = (0..n).map(|s| sd.w[s] * sd.x[s] * p[s] * p[s]).sum();
        let bk = xh / h;
        b.push(bk);
        if k + 1 == n {
            break;
        }
        let next: Vec<f64> = (0..n)
            .map(|s| (sd.x[s] - bk) * p[s] - if k >= 1 { u[k - 1] * p_prev[s] } else { 0.0 })
            .collect();
        h_prev = h;
        p_prev = std::mem::replace(&mut p, next);
    }
    JacobiMatrix::new(b, u)
}

/// Monic polynomial with the given roots.
fn poly_from_roots<R: Ring>(roots: &[R]) -> Poly<R> {
    let proto = &roots[0];
    let mut p = Poly::constant(Var::X, proto.one_of());
    for r in roots {
        let factor = Poly::new(Var::X, vec![r.neg(), r.one_of()]);
        p = p.mul(&factor);
    }
    p
}

/// Newton-form interpolation through (nodes, values), returned in the
/// monomial basis.
fn interpolate<R: DivRing>(nodes: &[R], values: &[R]) -> Option<Poly<R>> {
    let n = nodes.len();
    // divided differences
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = dd[i].sub(&dd[i - 1]);
            let den = nodes[i].sub(&nodes[i - level]);
            dd[i] = num.try_div(&den)?;
        }
    }
    // Horner assembly of the Newton form
    let mut p = Poly::constant(Var::X, dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        let factor = Poly::new(Var::X, vec![nodes[i].neg(), nodes[i].one_of()]);
        p = p.mul(&factor).add(&Poly::constant(Var::X, dd[i].clone()));
    }
    Some(p)
}

/// Shared reconstruction: from eigenvalues and the values of π_{N-1} at
/// them, recover (b, u) by interpolation and Euclidean descent.
///
/// Returns the coefficient arrays; positivity of u is checked by the
/// callers against their own sign structure.
fn reconstruct_from_pi<R: DivRing>(
    nodes: &[R],
    pi_values: &[R],
    degree_tol: f64,
) -> Result<(Vec<R>, Vec<R>)> {
    let n = nodes.len();
    let proto = &nodes[0];
    // leading coefficient of the interpolant of the π values is
    // Σ π_s / Ω'(x_s) = 1/sqrt(h_{N-1}); monic P_{N-1} = sqrt(h) * interpolant
    let mut lead = proto.zero_of();
    for s in 0..n {
        let mut omega_p = proto.one_of();
        for r in 0..n {
            if r != s {
                omega_p = omega_p.mul(&nodes[s].sub(&nodes[r]));
            }
        }
        lead = lead.add(
            &pi_values[s]
                .try_div(&omega_p)
                .ok_or_else(|| Error::InvalidInput("coincident nodes".into()))?,
        );
    }
    if lead.is_zero() {
        return Err(Error::InvalidInput(
            "interpolation produces deg P_{N-1} < N-1".into(),
        ));
    }
    let sqrt_h = proto
        .one_of()
        .try_div(&lead)
        .ok_or_else(|| Error::InvalidInput("vanishing leading coefficient".into()))?;
    let p_vals: Vec<R> = pi_values.iter().map(|v| v.mul(&sqrt_h)).collect();
    let p_last = interpolate(nodes, &p_vals)
        .ok_or_else(|| Error::InvalidInput("coincident nodes".into()))?;
    if p_last.degree() != n - 1 {
        return Err(Error::InvalidInput(format!(
            "interpolation produces deg P_{{N-1}} = {} != {}",
            p_last.degree(),
            n - 1
        )));
    }
    let p_n = poly_from_roots(nodes);

    // descend: P_{k+1} = (x - b_k) P_k - u_k P_{k-1}
    let mut b_rev: Vec<R> = Vec::with_capacity(n);
    let mut u_rev: Vec<R> = Vec::with_capacity(n - 1);
    let mut upper = p_n;
    let mut lower = p_last;
    for k in (1..n).rev() {
        let (q, r) = upper
            .divrem(&lower)
            .ok_or_else(|| Error::NotInvertible("descent division".into()))?;
        // q = x - b_k
        debug_assert_eq!(q.degree(), 1);
        b_rev.push(q.coeff(0).neg());
        let scale = upper.magnitude().max(1.0);
        if r.degree() != k - 1 || r.leading().magnitude() < degree_tol * scale {
            return Err(Error::InvalidInput(format!(
                "degree drop in the descent at k = {k}"
            )));
        }
        let uk = r.leading().neg();
        let inv = uk
            .one_of()
            .try_div(&uk.neg())
            .ok_or_else(|| Error::NotInvertible("descent normalization".into()))?;
        let p_prev = r.scale(&inv);
        u_rev.push(uk);
        upper = std::mem::replace(&mut lower, p_prev);
    }
    // after the loop, upper = P_1 = x - b_0 and lower = P_0 = 1
    debug_assert_eq!(upper.degree(), 1);
    debug_assert_eq!(lower.degree(), 0);
    b_rev.push(upper.coeff(0).neg());
    b_rev.reverse();
    u_rev.reverse();
    Ok((b_rev, u_rev))
}

/// The unique persymmetric Jacobi matrix with the given symmetric spectrum
/// (π_{N-1}(x_s) = (-1)^{N-s-1} for ascending eigenvalues).
pub fn persymmetric_from_spectrum(x: &[f64]) -> Result<JacobiMatrix> {
    let n = x.len();
    if n == 0 {
        return Err(Error::InvalidInput("empty spectrum".into()));
    }
    let scale = x.iter().fold(1e-30f64, |m, v| m.max(v.abs()));
    for s in 0..n {
        if (x[s] + x[n - 1 - s]).abs() > 1e-10 * scale {
            return Err(Error::InvalidInput(
                "spectrum is not symmetric about zero".into(),
            ));
        }
        if s + 1 < n && x[s] >= x[s + 1] {
            return Err(Error::InvalidInput(
                "spectrum must be strictly ascending".into(),
            ));
        }
    }
    let pi: Vec<f64> = (0..n)
        .map(|s| if (n - 1 - s) % 2 == 0 { 1.0 } else { -1.0 })
        .collect();
    let (b, u) = reconstruct_from_pi(x, &pi, 1e-10)?;
    for (i, &uk) in u.iter().enumerate() {
        if uk <= 0.0 {
            return Err(Error::NonpositiveOffDiagonal {
                index: i + 1,
                value: uk,
            });
        }
    }
    JacobiMatrix::new(b, u)
}

/// π values of the per-skew τ-pattern on the full (ascending) spectrum.
///
/// Lower half: π_{N-1}(x_s) = (-1)^{s+1} τ_s (even size) or (-1)^s τ_s (odd
/// size); the middle value of an odd matrix is (-1)^{N(N-1)/2}; the upper
/// half is forced by the product law π(x_s) π(x_{N-1-s}) = (-1)^{N-1}.
fn tau_to_pi<R: DivRing>(tau: &[R], parity: Parity) -> Result<Vec<R>> {
    let m = tau.len();
    let n = match parity {
        Parity::Even => 2 * m,
        Parity::Odd => 2 * m + 1,
    };
    let proto = &tau[0];
    let mut pi = vec![proto.zero_of(); n];
    for s in 0..m {
        let sign_pos = match parity {
            Parity::Even => (s + 1) % 2 == 0,
            Parity::Odd => s % 2 == 0,
        };
        pi[s] = if sign_pos {
            tau[s].clone()
        } else {
            tau[s].neg()
        };
        let closure = proto
            .one_of()
            .try_div(&pi[s])
            .ok_or_else(|| Error::InvalidInput("tau parameters must be nonzero".into()))?;
        pi[n - 1 - s] = if (n - 1) % 2 == 0 {
            closure
        } else {
            closure.neg()
        };
    }
    if let Parity::Odd = parity {
        // middle value: (-1)^{N(N-1)/2} = (-1)^m for N = 2m+1
        pi[m] = if m % 2 == 0 {
            proto.one_of()
        } else {
            proto.one_of().neg()
        };
    }
    Ok(pi)
}

/// Per-skew reconstruction from positive eigenvalues and τ-parameters.
///
/// The interpolation-plus-descent is numerically delicate in binary64; since
/// the inputs are exact binary64 rationals, the descent is run in exact
/// rational arithmetic and only the final coefficients are rounded back.
pub fn perskew_from_tau(x_half: &[f64], tau: &[f64], parity: Parity) -> Result<JacobiMatrix> {
    let m = x_half.len();
    if m == 0 || tau.len() != m {
        return Err(Error::DimensionMismatch(
            "need equally many positive eigenvalues and tau parameters".into(),
        ));
    }
    for pair in x_half.windows(2) {
        if pair[0] >= pair[1] {
            return Err(Error::InvalidInput(
                "positive eigenvalues must be strictly ascending".into(),
            ));
        }
    }
    if x_half[0] <= 0.0 {
        return Err(Error::InvalidInput("eigenvalues must be positive".into()));
    }
    if tau.iter().any(|&t| t <= 0.0) {
        return Err(Error::InvalidInput(
            "tau parameters must be positive".into(),
        ));
    }
    let lift = |v: &[f64]| -> Result<Vec<ExactRational>> {
        v.iter()
            .map(|&x| {
                ExactRational::from_f64_exact(x)
                    .ok_or_else(|| Error::InvalidInput("non-finite input".into()))
            })
            .collect()
    };
    let (b, u) = perskew_from_tau_exact(&lift(x_half)?, &lift(tau)?, parity)?;
    JacobiMatrix::new(
        b.iter().map(|q| q.to_f64()).collect(),
        u.iter().map(|q| q.to_f64()).collect(),
    )
}

/// Extract (x_half, τ, parity) from a per-skew matrix with positive
/// off-diagonal entries: the positive eigenvalues and the magnitudes of
/// π_{N-1} at the negative half of the spectrum. Interlacing forces the sign
/// pattern of π_{N-1}(x_s) to be (-1)^{N-1-s}, so the magnitudes carry all
/// remaining freedom.
pub fn extract_tau(j: &JacobiMatrix) -> Result<(Vec<f64>, Vec<f64>, Parity)> {
    let n = j.size();
    let sd = j.eigendecompose()?;
    let m = n / 2;
    let parity = if n % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    };
    let x_half: Vec<f64> = (n - m..n).map(|s| sd.x[s]).collect();
    let sqrt_h = j.h_last().sqrt();
    let tau: Vec<f64> = (0..m)
        .map(|s| (j.polynomial_values(sd.x[s])[n - 1] / sqrt_h).abs())
        .collect();
    Ok((x_half, tau, parity))
}

/// Exact-rational variant of the τ reconstruction; returns the diagonal and
/// sub-diagonal as exact rationals.
pub fn perskew_from_tau_exact(
    x_half: &[ExactRational],
    tau: &[ExactRational],
    parity: Parity,
) -> Result<(Vec<ExactRational>, Vec<ExactRational>)> {
    if x_half.is_empty() || tau.len() != x_half.len() {
        return Err(Error::DimensionMismatch(
            "need equally many positive eigenvalues and tau parameters".into(),
        ));
    }
    if tau.iter().any(|t| t.is_zero()) {
        return Err(Error::InvalidInput("tau parameters must be nonzero".into()));
    }
    let mut x: Vec<ExactRational> = x_half.iter().rev().map(|v| v.neg()).collect();
    if let Parity::Odd = parity {
        x.push(ExactRational::zero());
    }
    x.extend_from_slice(x_half);
    let pi = tau_to_pi(tau, parity)?;
    let (b, u) = reconstruct_from_pi(&x, &pi, 0.0)?;
    for (i, uk) in u.iter().enumerate() {
        if uk.is_negative() || uk.is_zero() {
            return Err(Error::NonpositiveOffDiagonal {
                index: i + 1,
                value: uk.to_f64(),
            });
        }
    }
    Ok((b, u))
}
