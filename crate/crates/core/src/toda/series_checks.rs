//! Stieltjes series, Riccati residual, second-kind functions and the time
//! derivative of the orthogonal polynomials — every identity as a residual.

use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::series::FormalSeries;
use crate::jets::{jet_ode2, Jet};
use crate::ring::{DiffRing, DivRing, Ring};

use super::moments::MomentTable;
use super::recurrence::{associated_polynomial, op_polynomial, RecurrenceCoefficients};

/// The Stieltjes series F(z) = Σ c_n z^{-n-1} of a moment table.
pub fn stieltjes_series<R: Ring>(m: &MomentTable<R>) -> FormalSeries<R> {
    FormalSeries::new(m.entries().to_vec())
}

/// Residual of the Riccati equation for the Stieltjes function,
/// dF/dt + c_0 - z F + (u_0/c_0) F², split into the z^0 coefficient and the
/// z^{-n-1} tail. Identically zero exactly when the moment recurrence holds.
#[derive(Clone, Debug)]
pub struct RiccatiResidual<R> {
    /// Coefficient of z^0: c_0 - f_0.
    pub z0: R,
    /// Coefficients of z^{-n-1}, n = 0, 1, ...
    pub tail: FormalSeries<R>,
}

impl<R: Ring> RiccatiResidual<R> {
    pub fn is_zero(&self) -> bool {
        self.z0.is_zero() && self.tail.is_zero()
    }

    pub fn max_magnitude(&self) -> f64 {
        self.z0.magnitude().max(self.tail.max_magnitude())
    }

    /// Index n of the first nonzero z^{-n-1} coefficient, if any.
    pub fn first_nonzero_tail(&self) -> Option<usize> {
        self.tail.coeffs().iter().position(|c| !c.is_zero())
    }
}

/// Riccati residual of an arbitrary series against the initial data
/// (c_0, u_0). The ratio u_0/c_0 is taken from the moment table so that the
/// check uses exactly the data that built the series.
pub fn riccati_residual<R: DiffRing>(
    series: &FormalSeries<R>,
    m: &MomentTable<R>,
) -> Result<RiccatiResidual<R>> {
    if series.order() < 2 {
        return Err(Error::InsufficientOrder {
            need: 2,
            have: series.order(),
        });
    }
    let f = series.coeffs();
    let ratio = m.ratio();
    let z0 = m.c0().sub(&f[0]);
    let mut tail = Vec::with_capacity(series.order() - 1);
    for n in 0..series.order() - 1 {
        // coefficient of z^{-n-1}: f_n' - f_{n+1} + ratio * Σ_{i+j=n-1} f_i f_j
        let mut r = f[n].dt().sub(&f[n + 1]);
        if n >= 1 {
            let mut conv = f[0].zero_of();
            for i in 0..n {
                conv = conv.add(&f[i].mul(&f[n - 1 - i]));
            }
            r = r.add(&ratio.mul(&conv));
        }
        tail.push(r);
    }
    Ok(RiccatiResidual {
        z0,
        tail: FormalSeries::new(tail),
    })
}

/// Outcome of the second-kind leading-coefficient check: the series
/// F P_n - c_0 P^(1)_{n-1} must begin h_n z^{-n-1} with h_n = c_0 u_1 ... u_n.
///
/// The c_0 weight on the associated polynomial is forced by the recurrence
/// for the numerator polynomials (Q_0 = 0, Q_1 = c_0 gives
/// Q_n = c_0 P^(1)_{n-1}); at n = 0 the chain relation closes with
/// u_0 F_{-1} = c_0, i.e. F_{-1} = c_0/u_0, the constant 1 in the type-B
/// normalization u_0 = c_0.
#[derive(Clone, Debug)]
pub struct SecondKindReport<R> {
    /// Measured coefficient of z^{-n-1}.
    pub leading: R,
    /// h_n = c_0 u_1 ... u_n from the recurrence coefficients.
    pub expected: R,
    /// Largest magnitude among the z^{n-1} .. z^{-n} coefficients, which the
    /// identity requires to vanish.
    pub prefix_magnitude: f64,
}

impl<R: Ring> SecondKindReport<R> {
    pub fn deviation(&self) -> f64 {
        self.leading
            .sub(&self.expected)
            .magnitude()
            .max(self.prefix_magnitude)
    }
}

/// Compute F P_n - P^(1)_{n-1} as a Laurent expansion and compare its leading
/// behavior with h_n z^{-n-1}.
pub fn second_kind_check<R: Ring>(
    m: &MomentTable<R>,
    rc: &RecurrenceCoefficients<R>,
    n: usize,
) -> Result<SecondKindReport<R>> {
    if m.n_max() + 1 < 2 * n + 2 {
        return Err(Error::InsufficientOrder {
            need: 2 * n + 2,
            have: m.n_max() + 1,
        });
    }
    let c = m.entries();
    let p = op_polynomial(rc, n)?;
    let zero = m.c0().zero_of();
    // coefficient of z^e in F * P_n, for e = n-1 down to -n-1
    let fp_coeff = |e: i64| -> R {
        let mut acc = zero.clone();
        for (k, pk) in p.coeffs().iter().enumerate() {
            let idx = k as i64 - e - 1;
            if idx >= 0 && (idx as usize) < c.len() {
                acc = acc.add(&pk.mul(&c[idx as usize]));
            }
        }
        acc
    };
    let assoc = if n >= 1 {
        associated_polynomial(rc, n - 1)?
    } else {
        Poly::constant(crate::exact::poly::Var::X, zero.clone())
    };
    // polynomial part (z^{n-1} .. z^0) and the z^{-1} .. z^{-n} band must
    // cancel against c_0 P^(1)_{n-1}
    let mut prefix_magnitude = 0.0f64;
    for e in (-(n as i64)..=(n as i64 - 1)).rev() {
        let mut coeff = fp_coeff(e);
        if n >= 1 && e >= 0 {
            coeff = coeff.sub(&m.c0().mul(&assoc.coeff(e as usize)));
        }
        prefix_magnitude = prefix_magnitude.max(coeff.magnitude());
    }
    let leading = fp_coeff(-(n as i64) - 1);
    // h_n = c_0 u_1 ... u_n
    let mut expected = m.c0().clone();
    for k in 1..=n {
        expected = expected.mul(rc.u_at(k as i64)?);
    }
    Ok(SecondKindReport {
        leading,
        expected,
        prefix_magnitude,
    })
}

/// Residual of dP_n/dt = -u_n P_{n-1} + u_0 P^(1)_{n-1}, returned
/// coefficient-wise (a polynomial in x over the differentiable ring).
///
/// At n = 0 both sides vanish under the P_{-1} = P^(1)_{-1} = 0 convention
/// and the residual is identically zero.
pub fn dot_p_residual<R: DiffRing>(rc: &RecurrenceCoefficients<R>, n: usize) -> Result<Poly<R>> {
    let p = op_polynomial(rc, n)?;
    if n == 0 {
        return Ok(Poly::constant(
            crate::exact::poly::Var::X,
            p.coeff(0).zero_of(),
        ));
    }
    let p_dot = p.map(crate::exact::poly::Var::X, |c| c.dt());
    let p_prev = op_polynomial(rc, n - 1)?;
    let assoc = associated_polynomial(rc, n - 1)?;
    let un = rc.u_at(n as i64)?;
    let u0 = rc.u_at(0)?;
    Ok(p_dot.add(&p_prev.scale(un)).sub(&assoc.scale(u0)))
}

/// Jet solution of psi'' + (u_0 - z²/4) psi = 0 from initial data at t0.
pub fn schrodinger_solution<R: DivRing>(u0: &Jet<R>, z: &R, psi0: R, dpsi0: R) -> Jet<R> {
    // psi'' = (z²/4 - u_0) psi
    let z2_4 = z.mul(z).div_nat(4);
    let g = Jet::constant(u0.t0(), z2_4, u0.order()).sub(u0);
    jet_ode2(&g, psi0, dpsi0)
}

/// Given a Schrödinger solution psi for the potential u_0 at spectral
/// parameter z, form F = psi'/psi + z/2 and return the Riccati residual jet
/// dF/dt + u_0 - z F + F² (the c_0 = u_0 normalization). The contract is
/// that the residual vanishes for any solution psi.
pub fn schrodinger_to_stieltjes<R: DivRing>(psi: &Jet<R>, u0: &Jet<R>, z: &R) -> Result<Jet<R>>
where
    Jet<R>: DiffRing,
{
    if psi.t0() != u0.t0() {
        return Err(Error::BasePointMismatch(psi.t0(), u0.t0()));
    }
    let inv = psi
        .reciprocal()
        .ok_or_else(|| Error::NotInvertible("psi vanishes at the base point".into()))?;
    let half_z = z.div_nat(2);
    let f = psi.dt().mul(&inv).add(&Jet::constant(
        psi.t0(),
        half_z,
        psi.order().saturating_sub(1),
    ));
    let zf = f.scale(z);
    let f2 = f.mul(&f);
    Ok(f.dt().add(u0).sub(&zf).add(&f2))
}
