//! Moment tables and Hankel determinants.

use crate::error::{Error, Result};
use crate::exact::det::det_exact;
use crate::exact::poly::PolyQ;
use crate::jets::Jet;
use crate::ring::{DiffRing, DivRing, Ring};

use super::SINGULAR_TOL;

/// The sequence c_0..c_N generated from (c_0, u_0) by
///
/// ```text
/// c_1 = dc_0/dt,   c_{n+1} = dc_n/dt + (u_0/c_0) Σ_{s=0}^{n-1} c_s c_{n-1-s}.
/// ```
///
/// The ratio u_0/c_0 used to build the table is stored with it so that
/// downstream residual checks never recompute (or re-round) it.
#[derive(Clone, Debug)]
pub struct MomentTable<R> {
    c: Vec<R>,
    u0: R,
    ratio: R,
}

impl<R: Ring> MomentTable<R> {
    /// Assemble a table from externally computed entries (e.g. discrete
    /// moments Σ_k A_k a_k^n at a fixed time).
    pub fn from_entries(c: Vec<R>, u0: R, ratio: R) -> Self {
        assert!(!c.is_empty(), "a moment table needs at least c_0");
        MomentTable { c, u0, ratio }
    }

    pub fn entries(&self) -> &[R] {
        &self.c
    }

    pub fn entry(&self, n: usize) -> Result<&R> {
        self.c.get(n).ok_or(Error::InsufficientOrder {
            need: n,
            have: self.c.len() - 1,
        })
    }

    pub fn c0(&self) -> &R {
        &self.c[0]
    }

    pub fn u0(&self) -> &R {
        &self.u0
    }

    pub fn ratio(&self) -> &R {
        &self.ratio
    }

    /// Highest stored moment index.
    pub fn n_max(&self) -> usize {
        self.c.len() - 1
    }

    /// Scale of the entries at the evaluation point, for singularity tests.
    pub fn scale(&self) -> f64 {
        self.c.iter().map(|c| c.magnitude()).fold(1.0, f64::max)
    }

    /// All moments multiplied by a constant. The stored ratio is adjusted so
    /// the scaled table is the moment table of (mu c_0, u_0); the identity
    /// u_n, b_n invariance under this map is the kappa-normalization.
    pub fn scaled(&self, mu: &R) -> Result<Self>
    where
        R: DivRing,
    {
        let ratio = self
            .ratio
            .try_div(mu)
            .ok_or_else(|| Error::NotInvertible("scaling constant".into()))?;
        Ok(MomentTable {
            c: self.c.iter().map(|c| c.mul(mu)).collect(),
            u0: self.u0.clone(),
            ratio,
        })
    }
}

impl<R: DiffRing + DivRing> MomentTable<R> {
    /// Build c_0..c_N from the initial pair. `c0` must be invertible.
    pub fn from_initial(c0: R, u0: R, n_max: usize) -> Result<Self> {
        let ratio = u0
            .try_div(&c0)
            .ok_or_else(|| Error::NotInvertible("c_0 (moment recurrence needs u_0/c_0)".into()))?;
        Self::from_initial_with_ratio(c0, u0, ratio, n_max)
    }
}

impl<R: DiffRing> MomentTable<R> {
    /// As `from_initial` with the ratio u_0/c_0 supplied by the caller
    /// (needed when u_0 = c_0 identically but c_0 is not invertible, e.g.
    /// the zero potential in the KdV identification).
    pub fn from_initial_with_ratio(c0: R, u0: R, ratio: R, n_max: usize) -> Result<Self> {
        let mut c = Vec::with_capacity(n_max + 1);
        c.push(c0);
        if n_max >= 1 {
            c.push(c[0].dt());
        }
        for n in 1..n_max {
            // Σ_{s=0}^{n-1} c_s c_{n-1-s}, folded by symmetry
            let mut conv = c[0].zero_of();
            for s in 0..n / 2 {
                let term = c[s].mul(&c[n - 1 - s]);
                conv = conv.add(&term).add(&term);
            }
            if n % 2 == 1 {
                let mid = &c[n / 2];
                conv = conv.add(&mid.mul(mid));
            }
            let next = c[n].dt().add(&ratio.mul(&conv));
            c.push(next);
        }
        Ok(MomentTable { c, u0, ratio })
    }
}

impl<R: DivRing> MomentTable<Jet<R>> {
    /// Jet-track constructor with explicit order and base-point validation.
    pub fn from_initial_jets(c0: &Jet<R>, u0: &Jet<R>, n_max: usize) -> Result<Self>
    where
        Jet<R>: DiffRing,
    {
        if c0.t0() != u0.t0() {
            return Err(Error::BasePointMismatch(c0.t0(), u0.t0()));
        }
        if c0.order() < n_max {
            return Err(Error::InsufficientOrder {
                need: n_max,
                have: c0.order(),
            });
        }
        MomentTable::from_initial(c0.clone(), u0.clone(), n_max)
    }

    /// Entries truncated to a fixed jet order (the Hankel value and its first
    /// time derivative only need order 1, which keeps exact determinants
    /// cheap).
    pub fn truncated_entries(&self, order: usize) -> Result<MomentTable<Jet<R>>> {
        let c = self
            .c
            .iter()
            .map(|j| j.truncate(order.min(j.order())))
            .collect::<Result<Vec<_>>>()?;
        Ok(MomentTable {
            c,
            u0: self.u0.clone(),
            ratio: self.ratio.clone(),
        })
    }
}

/// Hankel determinant H_n = det ||c_{i+k}||_{i,k=0}^{n-1}; H_0 = 1, H_1 = c_0.
pub fn hankel<R: Ring + DivRing>(m: &MomentTable<R>, n: usize) -> Result<R> {
    if n == 0 {
        return Ok(m.c0().one_of());
    }
    if 2 * (n - 1) > m.n_max() {
        return Err(Error::InsufficientOrder {
            need: 2 * (n - 1),
            have: m.n_max(),
        });
    }
    let mat: Vec<Vec<R>> = (0..n)
        .map(|i| (0..n).map(|k| m.c[i + k].clone()).collect())
        .collect();
    det_exact(&mat)
}

/// Residual of the bilinear recurrence
/// (d²/dt² log H_n) + u_0 - H_{n-1} H_{n+1} / H_n², over a field-like ring.
pub fn bilinear_residual<R: DiffRing + DivRing>(m: &MomentTable<R>, n: usize) -> Result<R> {
    if n == 0 {
        return Err(Error::InvalidInput("bilinear residual needs n >= 1".into()));
    }
    let h_prev = hankel(m, n - 1)?;
    let h = hankel(m, n)?;
    let h_next = hankel(m, n + 1)?;
    let singular = if R::exact_arithmetic() {
        h.is_zero()
    } else {
        h.is_zero() || h.magnitude() < SINGULAR_TOL * m.scale()
    };
    if singular {
        return Err(Error::SingularHankel { n });
    }
    let hd = h.dt();
    let hdd = hd.dt();
    // (log H)'' = (H'' H - H'^2) / H^2
    let h2 = h.mul(&h);
    let log_dd = hdd
        .mul(&h)
        .sub(&hd.mul(&hd))
        .try_div(&h2)
        .ok_or(Error::SingularHankel { n })?;
    let ratio_term = h_prev
        .mul(&h_next)
        .try_div(&h2)
        .ok_or(Error::SingularHankel { n })?;
    Ok(log_dd.add(m.u0()).sub(&ratio_term))
}

/// Numerator form of the bilinear residual for polynomial moment tables:
/// H_n'' H_n - H_n'^2 + u_0 H_n^2 - H_{n-1} H_{n+1}. Identically zero exactly
/// when the residual itself vanishes.
pub fn bilinear_residual_poly(m: &MomentTable<PolyQ>, n: usize) -> Result<PolyQ> {
    if n == 0 {
        return Err(Error::InvalidInput("bilinear residual needs n >= 1".into()));
    }
    let h_prev = hankel(m, n - 1)?;
    let h = hankel(m, n)?;
    let h_next = hankel(m, n + 1)?;
    if h.is_zero() {
        return Err(Error::SingularHankel { n });
    }
    let hd = h.derivative();
    let hdd = hd.derivative();
    Ok(hdd
        .mul(&h)
        .sub(&hd.mul(&hd))
        .add(&m.u0().mul(&h.mul(&h)))
        .sub(&h_prev.mul(&h_next)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{PolyQ, Var};
    use crate::exact::rational::ExactRational;
    use crate::jets::{jet_lift, PotentialSpec};

    fn yv_table(n_max: usize) -> MomentTable<PolyQ> {
        let t = PolyQ::var_q(Var::T);
        MomentTable::from_initial(t.clone(), t, n_max).unwrap()
    }

    #[test]
    fn moment_recurrence_hand_oracle_linear() {
        // c0 = u0 = t: c1 = 1, c2 = t^2, c3 = 4t, c4 = 2t^3 + 5
        let m = yv_table(4);
        assert_eq!(m.entries()[1], PolyQ::one_q(Var::T));
        assert_eq!(m.entries()[2], PolyQ::from_ints(Var::T, &[0, 0, 1]));
        assert_eq!(m.entries()[3], PolyQ::from_ints(Var::T, &[0, 4]));
        assert_eq!(m.entries()[4], PolyQ::from_ints(Var::T, &[5, 0, 0, 2]));
    }

    #[test]
    fn moment_recurrence_constant_initial_data() {
        // c0 = u0 = k: all derivatives vanish, c1 = 0, c2 = k^2, c3 = 0
        let k = ExactRational::new(7, 2);
        let m = MomentTable::from_initial(
            PolyQ::constant(Var::T, k.clone()),
            PolyQ::constant(Var::T, k.clone()),
            3,
        )
        .unwrap();
        assert!(m.entries()[1].is_zero());
        assert_eq!(m.entries()[2], PolyQ::constant(Var::T, k.mul(&k)));
        assert!(m.entries()[3].is_zero());
    }

    #[test]
    fn moment_recurrence_jet_track_centrifugal() {
        // c0 = u0 = 1/t^2 at t=1: c0 = 1, c1 = -2, c2 = 7
        let j = jet_lift(&PotentialSpec::Centrifugal { alpha: 1.0 }, 1.0, 6).unwrap();
        let m = MomentTable::from_initial_jets(&j, &j, 2).unwrap();
        assert!((m.entries()[0].value() - 1.0).abs() < 1e-12);
        assert!((m.entries()[1].value() + 2.0).abs() < 1e-12);
        assert!((m.entries()[2].value() - 7.0).abs() < 1e-11);
    }

    #[test]
    fn hankel_small_cases() {
        let m = yv_table(4);
        assert_eq!(hankel(&m, 0).unwrap(), PolyQ::one_q(Var::T));
        assert_eq!(hankel(&m, 1).unwrap(), PolyQ::var_q(Var::T));
        // H_2 = det [[t, 1], [1, t^2]] = t^3 - 1
        assert_eq!(
            hankel(&m, 2).unwrap(),
            PolyQ::from_ints(Var::T, &[-1, 0, 0, 1])
        );
        assert!(hankel(&m, 4).is_err());
    }

    #[test]
    fn bilinear_residual_vanishes_on_exact_table() {
        let m = yv_table(6);
        for n in 1..=2 {
            let r = bilinear_residual_poly(&m, n).unwrap();
            assert!(r.is_zero(), "n = {n}: {r:?}");
        }
    }

    #[test]
    fn bilinear_residual_vanishes_on_jets() {
        let j = jet_lift(&PotentialSpec::Sech2 { n: 2 }, 0.1, 10).unwrap();
        let m = MomentTable::from_initial_jets(&j, &j, 6).unwrap();
        let r = bilinear_residual(&m, 2).unwrap();
        assert!(r.magnitude() < 1e-9, "residual {r:?}");
    }

    #[test]
    fn insufficient_jet_order_is_reported() {
        let j = jet_lift(&PotentialSpec::Linear, 0.0, 3).unwrap();
        assert!(MomentTable::from_initial_jets(&j, &j, 5).is_err());
    }
}
