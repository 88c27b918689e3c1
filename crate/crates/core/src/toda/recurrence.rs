//! Recurrence coefficients (b_n, u_n) from moments, and the polynomials they
//! generate.
//!
//! Two routes are provided and must agree on exact inputs:
//!
//! * Hankel ratios u_n = H_{n-1} H_{n+1} / H_n², b_n = d/dt log(H_{n+1}/H_n) —
//!   the route used by the exact tracks;
//! * Gram orthogonalization of monomials against the moment functional — the
//!   route used for numeric jets, where Hankel ratios cancel catastrophically
//!   past n ≈ 8.

use crate::error::{Error, Result};
use crate::exact::det::det_laplace;
use crate::exact::poly::{Poly, PolyQ, Var};
use crate::exact::ratfun::{rational_logderiv, RationalFunction};
use crate::jets::Jet;
use crate::ring::{DiffRing, DivRing, Ring};

use super::moments::{hankel, MomentTable};
use super::SINGULAR_TOL;

/// Windowed arrays of recurrence coefficients, indices possibly negative
/// after a reflection extension. `truncated` records the first index n at
/// which h_n = H_{n+1}/H_n was singular, if any; b is then valid below n and
/// u through n.
#[derive(Clone, Debug)]
pub struct RecurrenceCoefficients<R> {
    b_lo: i64,
    b: Vec<R>,
    u_lo: i64,
    u: Vec<R>,
    truncated: Option<i64>,
}

impl<R: Ring> RecurrenceCoefficients<R> {
    pub fn new(b_lo: i64, b: Vec<R>, u_lo: i64, u: Vec<R>) -> Self {
        RecurrenceCoefficients {
            b_lo,
            b,
            u_lo,
            u,
            truncated: None,
        }
    }

    pub fn b_window(&self) -> (i64, i64) {
        (self.b_lo, self.b_lo + self.b.len() as i64 - 1)
    }

    pub fn u_window(&self) -> (i64, i64) {
        (self.u_lo, self.u_lo + self.u.len() as i64 - 1)
    }

    pub fn truncated_at(&self) -> Option<i64> {
        self.truncated
    }

    pub fn b_at(&self, n: i64) -> Result<&R> {
        let idx = n - self.b_lo;
        if idx < 0 || idx >= self.b.len() as i64 {
            return Err(Error::WindowTooShort(n));
        }
        Ok(&self.b[idx as usize])
    }

    pub fn u_at(&self, n: i64) -> Result<&R> {
        let idx = n - self.u_lo;
        if idx < 0 || idx >= self.u.len() as i64 {
            return Err(Error::WindowTooShort(n));
        }
        Ok(&self.u[idx as usize])
    }

    /// Shift every b_n by a constant; u_n are untouched. The Toda equations
    /// are invariant under this map.
    pub fn beta_shift(&self, beta: &R) -> Self {
        RecurrenceCoefficients {
            b_lo: self.b_lo,
            b: self.b.iter().map(|b| b.add(beta)).collect(),
            u_lo: self.u_lo,
            u: self.u.clone(),
            truncated: self.truncated,
        }
    }

    fn scale_hint(&self) -> f64 {
        self.b
            .iter()
            .chain(self.u.iter())
            .map(|x| x.magnitude())
            .fold(1.0, f64::max)
    }
}

/// Moment functional inner product ⟨p, q⟩ = Σ_{i,j} p_i q_j c_{i+j}, with a
/// cancellation gauge (the same sum over magnitudes) for singularity tests.
fn functional_inner<R: Ring>(m: &MomentTable<R>, p: &[R], q: &[R]) -> (R, f64) {
    let mut acc = m.c0().zero_of();
    let mut gauge = 0.0f64;
    for (i, pi) in p.iter().enumerate() {
        for (j, qj) in q.iter().enumerate() {
            let c = &m.entries()[i + j];
            acc = acc.add(&pi.mul(qj).mul(c));
            gauge += pi.magnitude() * qj.magnitude() * c.magnitude();
        }
    }
    (acc, gauge)
}

fn mul_x<R: Ring>(p: &[R]) -> Vec<R> {
    let mut out = Vec::with_capacity(p.len() + 1);
    out.push(p[0].zero_of());
    out.extend(p.iter().cloned());
    out
}

/// Gram-orthogonalization route: works in any ring with division, needs no
/// time derivative. Requires moments through c_{2 n_max + 1}.
pub fn recurrence_from_moments<R: DivRing>(
    m: &MomentTable<R>,
    n_max: usize,
) -> Result<RecurrenceCoefficients<R>> {
    if m.n_max() < 2 * n_max + 1 {
        return Err(Error::InsufficientOrder {
            need: 2 * n_max + 1,
            have: m.n_max(),
        });
    }
    let mut b: Vec<R> = Vec::new();
    let mut u: Vec<R> = vec![m.u0().clone()];
    let mut truncated = None;
    // p_{-1} = 0, p_0 = 1
    let mut p_prev: Vec<R> = vec![];
    let mut p: Vec<R> = vec![m.c0().one_of()];
    let mut h_prev: Option<R> = None;
    for n in 0..=n_max {
        let (h, gauge) = functional_inner(m, &p, &p);
        if let Some(hp) = &h_prev {
            // u_n = h_n / h_{n-1}; valid even when h_n degenerates
            let un = h.try_div(hp).ok_or(Error::SingularHankel { n: n - 1 })?;
            u.push(un);
        }
        let singular = if R::exact_arithmetic() {
            h.is_zero()
        } else {
            h.is_zero() || h.magnitude() < SINGULAR_TOL * gauge.max(1e-300)
        };
        if singular {
            truncated = Some(n as i64);
            break;
        }
        let (xpp, _) = functional_inner(m, &mul_x(&p), &p);
        let bn = xpp.try_div(&h).ok_or(Error::SingularHankel { n })?;
        b.push(bn.clone());
        if n == n_max {
            break;
        }
        // p_{n+1} = (x - b_n) p_n - u_n p_{n-1}
        let mut next = mul_x(&p);
        for (k, c) in p.iter().enumerate() {
            next[k] = next[k].sub(&bn.mul(c));
        }
        if n >= 1 {
            let un = &u[n];
            for (k, c) in p_prev.iter().enumerate() {
                next[k] = next[k].sub(&un.mul(c));
            }
        }
        h_prev = Some(h);
        p_prev = std::mem::replace(&mut p, next);
    }
    let mut rc = RecurrenceCoefficients::new(0, b, 0, u);
    rc.truncated = truncated;
    Ok(rc)
}

/// Hankel-ratio route; requires a time derivative on the ring and moments
/// through c_{2 n_max}.
pub fn recurrence_from_moments_hankel<R: DiffRing + DivRing>(
    m: &MomentTable<R>,
    n_max: usize,
) -> Result<RecurrenceCoefficients<R>> {
    if m.n_max() < 2 * n_max {
        return Err(Error::InsufficientOrder {
            need: 2 * n_max,
            have: m.n_max(),
        });
    }
    let mut h: Vec<R> = Vec::with_capacity(n_max + 2);
    let mut singular_at: Option<usize> = None;
    for n in 0..=n_max + 1 {
        let hn = hankel(m, n)?;
        if n >= 1 && singular_at.is_none() {
            let singular = if R::exact_arithmetic() {
                hn.is_zero()
            } else {
                // Hadamard-style gauge: the determinant's scale before
                // cancellation is the product of row magnitudes
                let gauge: f64 = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|k| m.entries()[i + k].magnitude())
                            .fold(0.0f64, f64::max)
                    })
                    .product();
                hn.is_zero() || hn.magnitude() < SINGULAR_TOL * gauge.max(1e-300)
            };
            if singular {
                singular_at = Some(n);
            }
        }
        h.push(hn);
        if singular_at == Some(n) {
            break;
        }
    }
    // h_n = H_{n+1}/H_n is singular first at s - 1 when H_s is the first
    // singular determinant; u is then valid through s - 1, b through s - 2.
    let (u_hi, b_hi, truncated) = match singular_at {
        Some(s) => (s as i64 - 1, s as i64 - 2, Some(s as i64 - 1)),
        None => (n_max as i64, n_max as i64, None),
    };
    let mut u: Vec<R> = vec![m.u0().clone()];
    for n in 1..=u_hi.max(0) as usize {
        let num = h[n - 1].mul(&h[n + 1]);
        let den = h[n].mul(&h[n]);
        u.push(num.try_div(&den).ok_or(Error::SingularHankel { n })?);
    }
    let mut b: Vec<R> = Vec::new();
    for n in 0..=b_hi.max(-1) {
        let n = n as usize;
        // b_n = H'_{n+1}/H_{n+1} - H'_n/H_n
        let t1 = h[n + 1]
            .dt()
            .try_div(&h[n + 1])
            .ok_or(Error::SingularHankel { n: n + 1 })?;
        let t2 = h[n]
            .dt()
            .try_div(&h[n])
            .ok_or(Error::SingularHankel { n })?;
        b.push(t1.sub(&t2));
    }
    let mut rc = RecurrenceCoefficients::new(0, b, 0, u);
    rc.truncated = truncated;
    Ok(rc)
}

/// Exact route for polynomial moment tables: Hankel determinants stay in the
/// polynomial ring, the coefficients come out as reduced rational functions.
pub fn recurrence_exact(
    m: &MomentTable<PolyQ>,
    n_max: usize,
) -> Result<RecurrenceCoefficients<RationalFunction>> {
    if m.n_max() < 2 * n_max {
        return Err(Error::InsufficientOrder {
            need: 2 * n_max,
            have: m.n_max(),
        });
    }
    let mut h: Vec<PolyQ> = Vec::with_capacity(n_max + 2);
    let mut singular_at: Option<usize> = None;
    for n in 0..=n_max + 1 {
        let hn = hankel(m, n)?;
        if n >= 1 && singular_at.is_none() && hn.is_zero() {
            singular_at = Some(n);
        }
        h.push(hn);
        if singular_at == Some(n) {
            break;
        }
    }
    let (u_hi, b_hi, truncated) = match singular_at {
        Some(s) => (s as i64 - 1, s as i64 - 2, Some(s as i64 - 1)),
        None => (n_max as i64, n_max as i64, None),
    };
    let var = m.c0().var();
    let u0 = RationalFunction::new(m.u0().clone(), PolyQ::one_q(var))?;
    let mut u: Vec<RationalFunction> = vec![u0];
    for n in 1..=u_hi.max(0) as usize {
        u.push(RationalFunction::new(
            h[n - 1].mul(&h[n + 1]),
            h[n].mul(&h[n]),
        )?);
    }
    let mut b: Vec<RationalFunction> = Vec::new();
    for n in 0..=b_hi.max(-1) {
        let n = n as usize;
        b.push(rational_logderiv(&h[n + 1], &h[n])?);
    }
    let mut rc = RecurrenceCoefficients::new(0, b, 0, u);
    rc.truncated = truncated;
    Ok(rc)
}

/// Coefficient values at the base point from an exact-coefficient jet table.
///
/// The Hankel value and its first derivative only involve the order-0 and
/// order-1 jet coefficients, so the entries are truncated to order 1 before
/// the exact determinant; `eval` maps the exact coefficient ring to binary64
/// at the very end. Returns (u_0..u_hi, b_0..b_hi, truncated).
pub fn recurrence_values<R: DivRing>(
    m: &MomentTable<Jet<R>>,
    n_max: usize,
    eval: impl Fn(&R) -> f64,
) -> Result<(Vec<f64>, Vec<f64>, Option<usize>)> {
    if m.n_max() < 2 * n_max {
        return Err(Error::InsufficientOrder {
            need: 2 * n_max,
            have: m.n_max(),
        });
    }
    let short = m.truncated_entries(1)?;
    let mut hv: Vec<f64> = Vec::new();
    let mut hd: Vec<f64> = Vec::new();
    let mut singular_at: Option<usize> = None;
    for n in 0..=n_max + 1 {
        let hn: Jet<R> = if n == 0 {
            short.c0().one_of()
        } else {
            let mat: Vec<Vec<Jet<R>>> = (0..n)
                .map(|i| (0..n).map(|k| short.entries()[i + k].clone()).collect())
                .collect();
            det_laplace(&mat)?
        };
        let v = eval(&hn.coeff(0));
        let d = eval(&hn.coeff(1));
        if n >= 1 && singular_at.is_none() && (hn.is_zero() || v.abs() < 1e-250) {
            singular_at = Some(n);
        }
        hv.push(v);
        hd.push(d);
        if singular_at == Some(n) {
            break;
        }
    }
    let (u_hi, b_hi, truncated) = match singular_at {
        Some(s) => (s - 1, s as i64 - 2, Some(s - 1)),
        None => (n_max, n_max as i64, None),
    };
    let mut u = vec![eval(&m.u0().coeff(0))];
    for n in 1..=u_hi {
        u.push(hv[n - 1] * hv[n + 1] / (hv[n] * hv[n]));
    }
    let mut b = Vec::new();
    for n in 0..=b_hi.max(-1) {
        let n = n as usize;
        b.push(hd[n + 1] / hv[n + 1] - hd[n] / hv[n]);
    }
    Ok((u, b, truncated))
}

/// Monic orthogonal polynomial P_n(x) from the three-term recurrence
/// P_{n+1} = (x - b_n) P_n - u_n P_{n-1}, P_0 = 1, P_1 = x - b_0.
pub fn op_polynomial<R: Ring>(rc: &RecurrenceCoefficients<R>, n: usize) -> Result<Poly<R>> {
    polynomial_from(rc, n, 0)
}

/// Associated polynomial P^(1)_n(x) from the index-shifted recurrence,
/// P^(1)_0 = 1, P^(1)_1 = x - b_1.
pub fn associated_polynomial<R: Ring>(rc: &RecurrenceCoefficients<R>, n: usize) -> Result<Poly<R>> {
    polynomial_from(rc, n, 1)
}

fn polynomial_from<R: Ring>(
    rc: &RecurrenceCoefficients<R>,
    n: usize,
    shift: i64,
) -> Result<Poly<R>> {
    let proto =
        rc.b.first()
            .or(rc.u.first())
            .ok_or(Error::WindowTooShort(0))?;
    let one = Poly::constant(Var::X, proto.one_of());
    if n == 0 {
        return Ok(one);
    }
    let x = Poly::identity(Var::X, proto);
    let mut p_prev = one;
    let mut p = x.sub(&Poly::constant(Var::X, rc.b_at(shift)?.clone()));
    for k in 1..n {
        let bk = rc.b_at(k as i64 + shift)?;
        let uk = rc.u_at(k as i64 + shift)?;
        let next = x
            .sub(&Poly::constant(Var::X, bk.clone()))
            .mul(&p)
            .sub(&p_prev.scale(uk));
        p_prev = std::mem::replace(&mut p, next);
    }
    Ok(p)
}

/// Extend a coefficient window through the reflection forced by b_j = 0:
/// u_m = u_{2j+1-m} and b_m = -b_{2j-m} for every m (so b_j itself is 0).
pub fn reflect_extend<R: Ring>(
    rc: &RecurrenceCoefficients<R>,
    j: i64,
) -> Result<RecurrenceCoefficients<R>> {
    let tol = 1e-9 * rc.scale_hint();
    // seed consistency: b_j must vanish if present
    if let Ok(bj) = rc.b_at(j) {
        if !bj.is_zero() && bj.magnitude() > tol {
            return Err(Error::InvalidInput(format!(
                "reflect_extend: b_{j} is not zero (|b_j| = {})",
                bj.magnitude()
            )));
        }
    }
    let (b_lo, b_hi) = rc.b_window();
    let (u_lo, u_hi) = rc.u_window();

    let pick = |orig: Result<&R>, mirror: Result<&R>, negate: bool| -> Result<Option<R>> {
        let mirror = mirror
            .ok()
            .map(|v| if negate { v.neg() } else { v.clone() });
        match (orig.ok(), mirror) {
            (Some(a), Some(b)) => {
                let d = a.sub(&b);
                if !d.is_zero() && d.magnitude() > tol {
                    return Err(Error::InvalidInput(
                        "reflect_extend: window data inconsistent with the reflection".into(),
                    ));
                }
                Ok(Some(a.clone()))
            }
            (Some(a), None) => Ok(Some(a.clone())),
            (None, Some(b)) => Ok(Some(b)),
            (None, None) => Ok(None),
        }
    };

    // the mirrored ranges; gaps at the fixed point are filled by b_j = 0
    let new_b_lo = b_lo.min(2 * j - b_hi);
    let new_b_hi = b_hi.max(2 * j - b_lo);
    let mut b = Vec::new();
    for m in new_b_lo..=new_b_hi {
        let v = if m == j {
            Some(rc.b.first().or(rc.u.first()).unwrap().zero_of())
        } else {
            pick(rc.b_at(m), rc.b_at(2 * j - m), true)?
        };
        b.push(v.ok_or(Error::WindowTooShort(m))?);
    }
    let new_u_lo = u_lo.min(2 * j + 1 - u_hi);
    let new_u_hi = u_hi.max(2 * j + 1 - u_lo);
    let mut u = Vec::new();
    for m in new_u_lo..=new_u_hi {
        let v = pick(rc.u_at(m), rc.u_at(2 * j + 1 - m), false)?;
        u.push(v.ok_or(Error::WindowTooShort(m))?);
    }
    Ok(RecurrenceCoefficients {
        b_lo: new_b_lo,
        b,
        u_lo: new_u_lo,
        u,
        truncated: rc.truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ExactRational;
    use crate::jets::{jet_lift, PotentialSpec};

    fn jet_table(spec: &PotentialSpec, t0: f64, n_max: usize) -> MomentTable<Jet<f64>> {
        let j = jet_lift(spec, t0, 2 * n_max + 4).unwrap();
        MomentTable::from_initial_jets(&j, &j, 2 * n_max + 2).unwrap()
    }

    #[test]
    fn centrifugal_closed_forms() {
        // u_n = (n(n+1) + 1)/t^2, b_n = -2(n+1)/t at alpha = 1, t = 1
        let m = jet_table(&PotentialSpec::Centrifugal { alpha: 1.0 }, 1.0, 4);
        let rc = recurrence_from_moments(&m, 4).unwrap();
        for n in 0..=4i64 {
            let expect_u = if n == 0 {
                1.0
            } else {
                (n * (n + 1) + 1) as f64
            };
            let expect_b = -2.0 * (n + 1) as f64;
            assert!((rc.u_at(n).unwrap().value() - expect_u).abs() < 1e-8);
            assert!((rc.b_at(n).unwrap().value() - expect_b).abs() < 1e-8);
        }
        assert!((rc.u_at(1).unwrap().value() - 3.0).abs() < 1e-9);
        assert!((rc.b_at(1).unwrap().value() + 4.0).abs() < 1e-9);
    }

    #[test]
    fn sech2_window_truncates_at_structural_zero() {
        // N = 2 at t = 0: u_1 = 4, u_2 = 0, b_0 = b_1 = 0
        let m = jet_table(&PotentialSpec::Sech2 { n: 2 }, 0.0, 4);
        let rc = recurrence_from_moments(&m, 4).unwrap();
        assert!((rc.u_at(1).unwrap().value() - 4.0).abs() < 1e-10);
        assert!(rc.u_at(2).unwrap().value().abs() < 1e-10);
        assert!(rc.b_at(0).unwrap().value().abs() < 1e-11);
        assert!(rc.b_at(1).unwrap().value().abs() < 1e-11);
        assert_eq!(rc.truncated_at(), Some(2));
        assert!(rc.b_at(2).is_err());
    }

    #[test]
    fn sec2_closed_forms() {
        // u_1 = 3/cos^2 t, b_1 = 4 tan t at alpha = 1, t = 0.3
        let t = 0.3f64;
        let m = jet_table(&PotentialSpec::Sec2 { alpha: 1.0 }, t, 3);
        let rc = recurrence_from_moments(&m, 3).unwrap();
        let c2 = t.cos() * t.cos();
        assert!((rc.u_at(1).unwrap().value() - 3.0 / c2).abs() < 1e-9);
        assert!((rc.b_at(1).unwrap().value() - 4.0 * t.tan()).abs() < 1e-9);
    }

    #[test]
    fn gram_and_hankel_routes_agree_on_jets() {
        let m = jet_table(&PotentialSpec::Sec2 { alpha: 1.0 }, 0.3, 3);
        let g = recurrence_from_moments(&m, 3).unwrap();
        let h = recurrence_from_moments_hankel(&m, 3).unwrap();
        for n in 0..=3i64 {
            assert!((g.u_at(n).unwrap().value() - h.u_at(n).unwrap().value()).abs() < 1e-7);
            assert!((g.b_at(n).unwrap().value() - h.b_at(n).unwrap().value()).abs() < 1e-7);
        }
    }

    #[test]
    fn exact_route_on_linear_potential() {
        let t = PolyQ::var_q(Var::T);
        let m = MomentTable::from_initial(t.clone(), t, 8).unwrap();
        let rc = recurrence_exact(&m, 3).unwrap();
        // b_0 = d/dt log c_0 = 1/t
        let b0 = rc.b_at(0).unwrap();
        assert_eq!(b0.num(), &PolyQ::one_q(Var::T));
        assert_eq!(b0.den(), &PolyQ::var_q(Var::T));
        // u_1 = H_2/H_1^2 = (t^3-1)/t^2
        let u1 = rc.u_at(1).unwrap();
        assert_eq!(u1.num(), &PolyQ::from_ints(Var::T, &[-1, 0, 0, 1]));
        assert_eq!(u1.den(), &PolyQ::from_ints(Var::T, &[0, 0, 1]));
    }

    #[test]
    fn kappa_scaling_leaves_coefficients_invariant() {
        let m = jet_table(&PotentialSpec::Centrifugal { alpha: 2.0 }, 1.0, 3);
        let mu = Jet::constant(1.0, 3.5f64, m.c0().order());
        let scaled = m.scaled(&mu).unwrap();
        let a = recurrence_from_moments(&m, 3).unwrap();
        let b = recurrence_from_moments(&scaled, 3).unwrap();
        for n in 0..=3i64 {
            assert!((a.u_at(n).unwrap().value() - b.u_at(n).unwrap().value()).abs() < 1e-8);
            assert!((a.b_at(n).unwrap().value() - b.b_at(n).unwrap().value()).abs() < 1e-8);
        }
    }

    #[test]
    fn polynomials_small_cases() {
        let m = jet_table(&PotentialSpec::Sech2 { n: 2 }, 0.0, 3);
        let rc = recurrence_from_moments(&m, 3).unwrap();
        let p0 = op_polynomial(&rc, 0).unwrap();
        assert_eq!(p0.degree(), 0);
        let p1 = op_polynomial(&rc, 1).unwrap();
        assert_eq!(p1.degree(), 1);
        assert!(p1.coeff(0).value().abs() < 1e-11); // x - b_0 = x
                                                    // P_2 = x^2 - 4 (equals Q_2(z; 0))
        let p2 = op_polynomial(&rc, 2).unwrap();
        assert!((p2.coeff(0).value() + 4.0).abs() < 1e-9);
        assert!(p2.coeff(1).value().abs() < 1e-10);
        assert!((p2.coeff(2).value() - 1.0).abs() < 1e-12);
        // associated: P1_1 = x - b_1 = x
        let a1 = associated_polynomial(&rc, 1).unwrap();
        assert!(a1.coeff(0).value().abs() < 1e-11);
        let a0 = associated_polynomial(&rc, 0).unwrap();
        assert_eq!(a0.degree(), 0);
    }

    #[test]
    fn beta_shift_examples() {
        let m = jet_table(&PotentialSpec::Centrifugal { alpha: 1.0 }, 1.0, 2);
        let rc = recurrence_from_moments(&m, 2).unwrap();
        let zero = rc.b_at(0).unwrap().zero_of();
        let same = rc.beta_shift(&zero);
        assert!((same.b_at(1).unwrap().value() - rc.b_at(1).unwrap().value()).abs() < 1e-14);
        let five = Jet::constant(1.0, 5.0, 4);
        let shifted = rc.beta_shift(&five);
        // b_0 = -2 -> 3, b_1 = -4 -> 1
        assert!((shifted.b_at(0).unwrap().value() - 3.0).abs() < 1e-9);
        assert!((shifted.b_at(1).unwrap().value() - 1.0).abs() < 1e-9);
        // u unchanged
        assert!((shifted.u_at(1).unwrap().value() - 3.0).abs() < 1e-9);
    }

    #[test]
    fn reflect_extend_solitonic() {
        // sech2(N=1): u_0 = 2 sech^2 t, u_1 = 0, b_0 = -2 tanh t; reflect at j = -1
        let t0 = 0.4f64;
        let m = jet_table(&PotentialSpec::Sech2 { n: 1 }, t0, 3);
        let rc = recurrence_from_moments(&m, 3).unwrap();
        let ext = reflect_extend(&rc, -1).unwrap();
        let u0 = ext.u_at(0).unwrap().value();
        assert!((ext.u_at(-1).unwrap().value() - u0).abs() < 1e-12);
        assert!((ext.b_at(-2).unwrap().value() + ext.b_at(0).unwrap().value()).abs() < 1e-12);
        assert!(ext.b_at(-1).unwrap().value().abs() < 1e-15);
        // proposition: u_{N-1} = 0 forces u_{-N} = 0 (here N = 2: u_1 = 0 -> u_{-2} = 0)
        assert!(ext.u_at(-2).unwrap().value().abs() < 1e-10);
    }

    #[test]
    fn reflect_extend_rejects_nonzero_pivot() {
        let b = vec![1.0f64, 2.0];
        let u = vec![1.0f64, 1.0];
        let rc = RecurrenceCoefficients::new(0, b, 0, u);
        assert!(reflect_extend(&rc, 0).is_err());
    }

    #[test]
    fn reflect_extend_zero_chain() {
        let rc = RecurrenceCoefficients::new(0, vec![0.0f64; 3], 0, vec![0.0f64; 3]);
        let ext = reflect_extend(&rc, 0).unwrap();
        let (lo, hi) = ext.b_window();
        for mth in lo..=hi {
            assert_eq!(*ext.b_at(mth).unwrap(), 0.0);
        }
    }

    #[test]
    fn symbolic_values_match_numeric() {
        use crate::jets::symbolic;
        let n_max = 3;
        let k = 2 * n_max + 2;
        let c0 = symbolic::centrifugal(ExactRational::from_int(1), ExactRational::from_int(1), k)
            .unwrap();
        let m = MomentTable::from_initial(c0.clone(), c0, k).unwrap();
        let (u, b, trunc) = recurrence_values(&m, n_max, |q| q.to_f64()).unwrap();
        assert!(trunc.is_none());
        for n in 1..=n_max {
            let expect_u = (n * (n + 1) + 1) as f64;
            assert!((u[n] - expect_u).abs() < 1e-12, "u_{n} = {}", u[n]);
            let expect_b = -2.0 * (n as f64 + 1.0);
            assert!((b[n] - expect_b).abs() < 1e-12, "b_{n} = {}", b[n]);
        }
    }
}
