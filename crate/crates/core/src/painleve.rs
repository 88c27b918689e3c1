//! Rational Painlevé-II solutions from the linear-potential moment chain.
//!
//! The moments a_0 = t, a_1 = 1, a_{n+1} = a_n' + Σ_{s=0}^{n-1} a_s a_{n-1-s}
//! generate Hankel determinants H_n(t) whose logarithmic-derivative ratios
//! V_N = d/dt log(H_{N+1}/H_N) solve
//!
//! ```text
//! V'' = 2 V³ - 4 t V + 4 (α + 1/2),    α = N + 1/2.
//! ```
//!
//! Everything in this module is exact rational arithmetic; the residual-is-
//! zero contract is only meaningful exactly.

use crate::error::{Error, Result};
use crate::exact::poly::{PolyQ, Var};
use crate::exact::ratfun::{rational_logderiv, RationalFunction};
use crate::exact::rational::ExactRational;
use crate::ring::Ring;
use crate::toda::{hankel, MomentTable};

/// Default cap on N: polynomial degrees grow quadratically and desk-scale
/// exact runs stay comfortable below this.
pub const MAX_N: u32 = 8;

/// A rational Painlevé-II solution V_N with its Hankel data.
#[derive(Clone, Debug)]
pub struct PiiSolution {
    pub n: u32,
    /// H_N(t)
    pub h_n: PolyQ,
    /// H_{N+1}(t)
    pub h_n1: PolyQ,
    /// V_N = d/dt log(H_{N+1}/H_N), reduced
    pub v: RationalFunction,
    /// α = N + 1/2, stored exactly
    pub alpha: ExactRational,
}

/// The linear-potential moment chain a_0 = t, a_1 = 1, ...
pub fn yv_moments(n_max: usize) -> MomentTable<PolyQ> {
    let t = PolyQ::var_q(Var::T);
    MomentTable::from_initial(t.clone(), t, n_max).expect("t is invertible in Q(t)")
}

/// Hankel determinant H_n of the linear-potential moments.
pub fn yv_hankel(n: usize) -> Result<PolyQ> {
    let m = yv_moments(if n == 0 { 0 } else { 2 * (n - 1) });
    hankel(&m, n)
}

/// Build V_N with its Hankel pair. Errors if either determinant vanishes
/// identically (which would contradict the construction) or N exceeds the cap.
pub fn pii_solution(n: u32) -> Result<PiiSolution> {
    if n > MAX_N {
        return Err(Error::InvalidInput(format!(
            "N = {n} exceeds the default cap {MAX_N}"
        )));
    }
    let m = yv_moments(2 * n as usize);
    let h_n = hankel(&m, n as usize)?;
    let h_n1 = hankel(&m, n as usize + 1)?;
    if h_n.is_zero() || h_n1.is_zero() {
        return Err(Error::SingularHankel {
            n: if h_n.is_zero() {
                n as usize
            } else {
                n as usize + 1
            },
        });
    }
    let v = rational_logderiv(&h_n1, &h_n)?;
    let alpha = ExactRational::from_int(n as i64).add(&ExactRational::new(1, 2));
    Ok(PiiSolution {
        n,
        h_n,
        h_n1,
        v,
        alpha,
    })
}

/// Exact residual V'' - 2V³ + 4tV - 4(α + 1/2) as a reduced rational
/// function. Identically zero for `pii_solution` outputs.
pub fn pii_residual(sol: &PiiSolution) -> RationalFunction {
    pii_residual_of(&sol.v, &sol.alpha)
}

/// Residual of an arbitrary candidate V at parameter α.
pub fn pii_residual_of(v: &RationalFunction, alpha: &ExactRational) -> RationalFunction {
    let a = v.num();
    let b = v.den();
    let ad = a.derivative();
    let add = ad.derivative();
    let bd = b.derivative();
    let bdd = bd.derivative();
    // V'' = [(A''B - AB'')B - 2B'(A'B - AB')] / B³
    let c = ad.mul(b).sub(&a.mul(&bd));
    let vdd_num = add
        .mul(b)
        .sub(&a.mul(&bdd))
        .mul(b)
        .sub(&bd.mul(&c).mul_nat(2));
    let b2 = b.mul(b);
    let b3 = b2.mul(b);
    let t = PolyQ::var_q(Var::T);
    // 4 (α + 1/2) as a constant polynomial
    let rhs_const = alpha
        .add(&ExactRational::new(1, 2))
        .mul(&ExactRational::from_int(4));
    let num = vdd_num
        .sub(&a.mul(a).mul(a).mul_nat(2))
        .add(&t.mul(a).mul(&b2).mul_nat(4))
        .sub(&b3.scale(&rhs_const));
    RationalFunction::new(num, b3).expect("B³ is nonzero")
}

/// Residual of the Laguerre-Hahn Riccati equation
/// 2 ∂_z F - z F² + z² F - t z - 1 for F = Σ a_n z^{-n-1}, split by power.
///
/// The positive powers force a_0 = t and a_1 = 1; the z^{-n-1} coefficient is
/// a_{n+2} - 2n a_{n-1} - Σ_{i+j=n} a_i a_j.
#[derive(Clone, Debug)]
pub struct LaguerreHahnResidual {
    /// Coefficient of z¹: a_0 - t.
    pub z1: PolyQ,
    /// Coefficient of z⁰: a_1 - 1.
    pub z0: PolyQ,
    /// Coefficients of z^{-n-1}, n = 0..order-1.
    pub tail: Vec<PolyQ>,
}

impl LaguerreHahnResidual {
    pub fn is_zero(&self) -> bool {
        self.z1.is_zero() && self.z0.is_zero() && self.tail.iter().all(|c| c.is_zero())
    }
}

/// Evaluate the Laguerre-Hahn residual through tail order K (i.e. through
/// the z^{-K} coefficient).
pub fn laguerre_hahn_residual(order: usize) -> Result<LaguerreHahnResidual> {
    if order < 2 {
        return Err(Error::InsufficientOrder {
            need: 2,
            have: order,
        });
    }
    let m = yv_moments(order + 1);
    let a = m.entries();
    let t = PolyQ::var_q(Var::T);
    let z1 = a[0].sub(&t);
    let z0 = a[1].sub(&PolyQ::one_q(Var::T));
    let mut tail = Vec::with_capacity(order);
    for n in 0..order {
        let mut r = a[n + 2].clone();
        if n >= 1 {
            r = r.sub(&a[n - 1].mul_nat(2 * n));
        }
        let mut conv = PolyQ::zero_q(Var::T);
        for i in 0..=n {
            conv = conv.add(&a[i].mul(&a[n - i]));
        }
        tail.push(r.sub(&conv));
    }
    Ok(LaguerreHahnResidual { z1, z0, tail })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toda::recurrence_exact;

    #[test]
    fn yv_moment_hand_oracles() {
        let m = yv_moments(4);
        assert_eq!(m.entries()[2], PolyQ::from_ints(Var::T, &[0, 0, 1]));
        assert_eq!(m.entries()[3], PolyQ::from_ints(Var::T, &[0, 4]));
        assert_eq!(m.entries()[4], PolyQ::from_ints(Var::T, &[5, 0, 0, 2]));
    }

    #[test]
    fn v0_and_v1_closed_forms() {
        // V_0 = 1/t (H_0 = 1, H_1 = t)
        let s0 = pii_solution(0).unwrap();
        assert_eq!(s0.v.num(), &PolyQ::one_q(Var::T));
        assert_eq!(s0.v.den(), &PolyQ::var_q(Var::T));
        // V_1 = 3t²/(t³-1) - 1/t = (2t³+1)/(t⁴-t), with H_2 = t³-1
        let s1 = pii_solution(1).unwrap();
        assert_eq!(s1.h_n1, PolyQ::from_ints(Var::T, &[-1, 0, 0, 1]));
        assert_eq!(s1.v.num(), &PolyQ::from_ints(Var::T, &[1, 0, 0, 2]));
        assert_eq!(s1.v.den(), &PolyQ::from_ints(Var::T, &[0, -1, 0, 0, 1]));
    }

    #[test]
    fn residual_zero_for_small_n() {
        for n in 0..=3u32 {
            let sol = pii_solution(n).unwrap();
            let r = pii_residual(&sol);
            assert!(r.is_zero(), "N = {n}: residual {r}");
        }
    }

    #[test]
    fn residual_detects_non_solution() {
        // V = t at α = 1/2: residual = -2t³ + 4t² - 4
        let v = RationalFunction::from_poly(PolyQ::var_q(Var::T));
        let r = pii_residual_of(&v, &ExactRational::new(1, 2));
        assert_eq!(r.num(), &PolyQ::from_ints(Var::T, &[-4, 0, 4, -2]));
        assert!(r.is_polynomial());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(pii_solution(MAX_N + 1).is_err());
    }

    #[test]
    fn b_n_equals_v_n_exactly() {
        // the moment-track b_N agrees with V_N as reduced rational functions
        for n in 0..=2u32 {
            let m = yv_moments(2 * (n as usize + 1));
            let rc = recurrence_exact(&m, n as usize + 1).unwrap();
            let sol = pii_solution(n).unwrap();
            let diff = rc.b_at(n as i64).unwrap().sub(&sol.v);
            assert!(diff.is_zero(), "N = {n}");
        }
    }

    #[test]
    fn laguerre_hahn_low_order_coefficients() {
        let r = laguerre_hahn_residual(6).unwrap();
        // z¹: a_0 - t = 0, z⁰: a_1 - 1 = 0, z^{-1}: a_2 - a_0² = 0
        assert!(r.z1.is_zero());
        assert!(r.z0.is_zero());
        assert!(r.tail[0].is_zero());
        assert!(r.is_zero());
    }

    #[test]
    fn yv_hankel_integer_coefficients_or_warn() {
        // observed property of the recurrence; warned, not asserted, past
        // any counterexample
        for n in 0..=6 {
            let h = yv_hankel(n).unwrap();
            if !h.has_integer_coeffs() {
                eprintln!("warning: H_{n} has non-integer coefficients: {h}");
            }
        }
    }
}
