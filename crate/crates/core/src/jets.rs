//! Truncated Taylor-series ("jet") arithmetic at a base point t0, plus
//! constructors for the named potentials.
//!
//! A jet of order K stores the coefficients j_0..j_K of Σ j_k (t-t0)^k. The
//! elementary potentials are built from the ODEs their building blocks
//! satisfy (tanh' = 1 - tanh², tan' = 1 + tan², (1/t)' = -(1/t)²), not from
//! symbolic composition, so the same recurrences run over `f64` and over
//! exact coefficient rings. In the exact instantiations the coefficient ring
//! is `ExactRational` (rational base point) or `PolyQ` in the frozen symbol
//! y = tanh t0 / y = tan t0.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::poly::{Poly, PolyQ, Var};
use crate::exact::rational::ExactRational;
use crate::ring::{DiffRing, DivRing, Ring};

/// Truncated Taylor expansion at a base point.
#[derive(Clone, PartialEq, Debug)]
pub struct Jet<R = f64> {
    t0: f64,
    coeffs: Vec<R>,
}

impl<R: Ring> Jet<R> {
    pub fn new(t0: f64, coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "jet needs at least one coefficient");
        Jet { t0, coeffs }
    }

    pub fn constant(t0: f64, value: R, order: usize) -> Self {
        let mut coeffs = vec![value.zero_of(); order + 1];
        coeffs[0] = value;
        Jet { t0, coeffs }
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        if k < self.coeffs.len() {
            self.coeffs[k].clone()
        } else {
            self.coeffs[0].zero_of()
        }
    }

    /// Value at the base point.
    pub fn value(&self) -> &R {
        &self.coeffs[0]
    }

    /// m-th derivative at the base point, m! * j_m.
    pub fn derivative_value(&self, m: usize) -> Result<R> {
        if m > self.order() {
            return Err(Error::InsufficientOrder {
                need: m,
                have: self.order(),
            });
        }
        let mut fact = 1usize;
        for k in 2..=m {
            fact *= k;
        }
        Ok(self.coeffs[m].mul_nat(fact))
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::InsufficientOrder {
                need: order,
                have: self.order(),
            });
        }
        Ok(Jet {
            t0: self.t0,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn scale(&self, s: &R) -> Self {
        Jet {
            t0: self.t0,
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Jet<S> {
        Jet {
            t0: self.t0,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_base(&self, rhs: &Self) {
        assert!(
            self.t0 == rhs.t0,
            "mismatched jet base points: {} vs {}",
            self.t0,
            rhs.t0
        );
    }
}

impl Jet<f64> {
    /// Max |coefficient| up to the valid order.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl<R: Ring> Ring for Jet<R> {
    fn zero_of(&self) -> Self {
        Jet {
            t0: self.t0,
            coeffs: vec![self.coeffs[0].zero_of(); self.coeffs.len()],
        }
    }

    fn one_of(&self) -> Self {
        let mut j = self.zero_of();
        j.coeffs[0] = self.coeffs[0].one_of();
        j
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check_base(rhs);
        let n = self.coeffs.len().min(rhs.coeffs.len());
        Jet {
            t0: self.t0,
            coeffs: (0..n).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect(),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.check_base(rhs);
        let n = self.coeffs.len().min(rhs.coeffs.len());
        Jet {
            t0: self.t0,
            coeffs: (0..n).map(|k| self.coeffs[k].sub(&rhs.coeffs[k])).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check_base(rhs);
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let zero = self.coeffs[0].zero_of();
        let mut coeffs = vec![zero; n];
        for k in 0..n {
            let mut acc = coeffs[k].zero_of();
            for i in 0..=k {
                acc = acc.add(&self.coeffs[i].mul(&rhs.coeffs[k - i]));
            }
            coeffs[k] = acc;
        }
        Jet {
            t0: self.t0,
            coeffs,
        }
    }

    fn neg(&self) -> Self {
        Jet {
            t0: self.t0,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn magnitude(&self) -> f64 {
        self.coeffs[0].magnitude()
    }

    fn exact_arithmetic() -> bool {
        R::exact_arithmetic()
    }
}

impl<R: Ring> DiffRing for Jet<R> {
    /// Derivative jet, one order lower. Panics on an order-0 jet; use
    /// [`jet_derivative`] for the checked variant.
    fn dt(&self) -> Self {
        assert!(self.order() >= 1, "derivative of an order-0 jet");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul_nat(k))
            .collect();
        Jet {
            t0: self.t0,
            coeffs,
        }
    }
}

impl<R: DivRing> Jet<R> {
    /// Reciprocal jet; requires an invertible constant term.
    pub fn reciprocal(&self) -> Option<Self> {
        let inv0 = self.coeffs[0].one_of().try_div(&self.coeffs[0])?;
        let mut coeffs = vec![inv0.clone()];
        for k in 1..self.coeffs.len() {
            let mut acc = inv0.zero_of();
            for i in 1..=k {
                acc = acc.add(&self.coeffs[i].mul(&coeffs[k - i]));
            }
            coeffs.push(acc.mul(&inv0).neg());
        }
        Some(Jet {
            t0: self.t0,
            coeffs,
        })
    }
}

impl<R: DivRing> DivRing for Jet<R> {
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        Some(self.mul(&rhs.reciprocal()?))
    }
}

/// Checked product of two jets; errors on mismatched base points.
pub fn jet_product(a: &Jet<f64>, b: &Jet<f64>) -> Result<Jet<f64>> {
    if a.t0() != b.t0() {
        return Err(Error::BasePointMismatch(a.t0(), b.t0()));
    }
    Ok(a.mul(b))
}

/// Checked reciprocal; errors on a vanishing constant term.
pub fn jet_reciprocal(a: &Jet<f64>) -> Result<Jet<f64>> {
    a.reciprocal()
        .ok_or_else(|| Error::NotInvertible("jet with zero constant term".into()))
}

/// Checked derivative; errors on an order-0 jet.
pub fn jet_derivative<R: Ring>(a: &Jet<R>) -> Result<Jet<R>> {
    if a.order() == 0 {
        return Err(Error::InsufficientOrder { need: 1, have: 0 });
    }
    Ok(a.dt())
}

// ── elementary jets via their defining ODEs ─────────────────────────────────

/// Jet of y with y' = 1 - y², y(t0) = y0 (tanh when y0 = tanh t0).
pub fn jet_tanh_like<R: DivRing>(y0: R, order: usize) -> Jet<R> {
    ode_first_order(y0, order, |sq_m, m| {
        if m == 0 {
            sq_m.neg().add(&sq_m.one_of())
        } else {
            sq_m.neg()
        }
    })
}

/// Jet of s with s' = 1 + s², s(t0) = s0 (tan when s0 = tan t0).
pub fn jet_tan_like<R: DivRing>(s0: R, order: usize) -> Jet<R> {
    ode_first_order(s0, order, |sq_m, m| {
        if m == 0 {
            sq_m.add(&sq_m.one_of())
        } else {
            sq_m.clone()
        }
    })
}

/// Shared driver for y' = f(y²) with f affine: y_{m+1} = rhs_m / (m+1),
/// where rhs_m is assembled from the m-th coefficient of y².
fn ode_first_order<R: DivRing>(
    y0: R,
    order: usize,
    rhs_from_square: impl Fn(&R, usize) -> R,
) -> Jet<R> {
    let mut y = vec![y0];
    for m in 0..order {
        // m-th coefficient of y*y from the coefficients known so far
        let mut sq = y[0].zero_of();
        for i in 0..=m {
            sq = sq.add(&y[i].mul(&y[m - i]));
        }
        let rhs = rhs_from_square(&sq, m);
        y.push(rhs.div_nat(m + 1));
    }
    Jet::new(0.0, y)
}

/// Jet of the reciprocal 1/t at t0 (coefficients (-1)^m / t0^{m+1}).
pub fn jet_recip_linear<R: DivRing>(t0: R, order: usize) -> Option<Jet<R>> {
    let inv = t0.one_of().try_div(&t0)?;
    let mut coeffs = vec![inv.clone()];
    for _ in 0..order {
        let last = coeffs.last().unwrap();
        coeffs.push(last.mul(&inv).neg());
    }
    Some(Jet::new(0.0, coeffs))
}

/// Jet of exp with value v0 and rate c: y' = c y, y(t0) = v0.
pub fn jet_exp<R: DivRing>(v0: R, rate: R, order: usize) -> Jet<R> {
    let mut coeffs = vec![v0];
    for m in 0..order {
        let next = rate.mul(&coeffs[m]).div_nat(m + 1);
        coeffs.push(next);
    }
    Jet::new(0.0, coeffs)
}

/// Jets of cosh and sinh at t0 (numeric).
pub fn jet_cosh_sinh(t0: f64, order: usize) -> (Jet<f64>, Jet<f64>) {
    let mut c = vec![t0.cosh()];
    let mut s = vec![t0.sinh()];
    for m in 0..order {
        c.push(s[m] / (m + 1) as f64);
        s.push(c[m] / (m + 1) as f64);
    }
    (Jet::new(t0, c), Jet::new(t0, s))
}

/// Propagate the second-order linear ODE psi'' = g * psi from initial data
/// (psi(t0), psi'(t0)); the result carries two guard orders above g.
pub fn jet_ode2<R: DivRing>(g: &Jet<R>, psi0: R, dpsi0: R) -> Jet<R> {
    let order = g.order() + 2;
    let mut psi = vec![psi0, dpsi0];
    for m in 0..order - 1 {
        let mut conv = psi[0].zero_of();
        for i in 0..=m.min(g.order()) {
            conv = conv.add(&g.coeff(i).mul(&psi[m - i]));
        }
        psi.push(conv.div_nat((m + 1) * (m + 2)));
    }
    Jet::new(g.t0(), psi)
}

// ── named potentials ────────────────────────────────────────────────────────

/// The named potential family u_0(t).
#[derive(Clone, PartialEq, Debug)]
pub enum PotentialSpec {
    /// alpha / t^2
    Centrifugal { alpha: f64 },
    /// alpha / cos^2 t
    Sec2 { alpha: f64 },
    /// N(N+1) / cosh^2 t
    Sech2 { n: u32 },
    /// u_0(t) = t
    Linear,
    /// raw Taylor coefficients at the requested base point
    Series(Vec<f64>),
}

impl PotentialSpec {
    /// Closed-form value of the potential at time t (used for
    /// finite-difference cross-checks).
    pub fn value(&self, t: f64) -> f64 {
        match self {
            PotentialSpec::Centrifugal { alpha } => alpha / (t * t),
            PotentialSpec::Sec2 { alpha } => alpha / (t.cos() * t.cos()),
            PotentialSpec::Sech2 { n } => {
                let nn = (*n as f64) * (*n as f64 + 1.0);
                let c = t.cosh();
                nn / (c * c)
            }
            PotentialSpec::Linear => t,
            PotentialSpec::Series(c) => {
                // only meaningful at the base point itself
                c.first().copied().unwrap_or(0.0)
            }
        }
    }
}

/// Taylor coefficients of the named potential at t0, to order `order`.
pub fn jet_lift(spec: &PotentialSpec, t0: f64, order: usize) -> Result<Jet<f64>> {
    match spec {
        PotentialSpec::Centrifugal { alpha } => {
            if t0.abs() < 1e-12 {
                return Err(Error::PotentialPole(t0));
            }
            let r = jet_recip_linear(t0, order).unwrap();
            Ok(rebase(r.mul(&r).scale(alpha), t0))
        }
        PotentialSpec::Sec2 { alpha } => {
            if t0.cos().abs() < 1e-12 {
                return Err(Error::PotentialPole(t0));
            }
            let s = jet_tan_like(t0.tan(), order);
            let one = s.one_of();
            Ok(rebase(one.add(&s.mul(&s)).scale(alpha), t0))
        }
        PotentialSpec::Sech2 { n } => {
            if *n < 1 {
                return Err(Error::InvalidInput("sech2 requires N >= 1".into()));
            }
            let nn = (*n as f64) * (*n as f64 + 1.0);
            let y = jet_tanh_like(t0.tanh(), order);
            let one = y.one_of();
            Ok(rebase(one.sub(&y.mul(&y)).scale(&nn), t0))
        }
        PotentialSpec::Linear => {
            let mut coeffs = vec![0.0; order + 1];
            coeffs[0] = t0;
            if order >= 1 {
                coeffs[1] = 1.0;
            }
            Ok(Jet::new(t0, coeffs))
        }
        PotentialSpec::Series(c) => {
            let mut coeffs = c.clone();
            coeffs.resize(order + 1, 0.0);
            coeffs.truncate(order + 1);
            Ok(Jet::new(t0, coeffs))
        }
    }
}

fn rebase<R: Ring>(jet: Jet<R>, t0: f64) -> Jet<R> {
    Jet::new(t0, jet.coeffs().to_vec())
}

impl FromStr for PotentialSpec {
    type Err = Error;

    /// Grammar: `centrifugal:alpha=<r>`, `sec2:alpha=<r>`, `sech2:N=<int>`,
    /// `linear`, `series:<c0,c1,...>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidInput(format!("potential spec `{s}`: {msg}"));
        let s = s.trim();
        if s == "linear" {
            return Ok(PotentialSpec::Linear);
        }
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| bad("expected `kind:params`"))?;
        match kind {
            "centrifugal" | "sec2" => {
                let v = rest
                    .strip_prefix("alpha=")
                    .ok_or_else(|| bad("expected alpha=<r>"))?;
                let alpha: f64 = v.parse().map_err(|_| bad("bad alpha"))?;
                Ok(if kind == "centrifugal" {
                    PotentialSpec::Centrifugal { alpha }
                } else {
                    PotentialSpec::Sec2 { alpha }
                })
            }
            "sech2" => {
                let v = rest
                    .strip_prefix("N=")
                    .ok_or_else(|| bad("expected N=<int>"))?;
                let n: u32 = v.parse().map_err(|_| bad("bad N"))?;
                if n < 1 {
                    return Err(bad("N must be >= 1"));
                }
                Ok(PotentialSpec::Sech2 { n })
            }
            "series" => {
                let coeffs = rest
                    .split(',')
                    .map(|c| c.trim().parse::<f64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad("bad coefficient list"))?;
                if coeffs.is_empty() {
                    return Err(bad("empty coefficient list"));
                }
                Ok(PotentialSpec::Series(coeffs))
            }
            _ => Err(bad("unknown kind")),
        }
    }
}

impl std::fmt::Display for PotentialSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PotentialSpec::Centrifugal { alpha } => write!(f, "centrifugal:alpha={alpha}"),
            PotentialSpec::Sec2 { alpha } => write!(f, "sec2:alpha={alpha}"),
            PotentialSpec::Sech2 { n } => write!(f, "sech2:N={n}"),
            PotentialSpec::Linear => write!(f, "linear"),
            PotentialSpec::Series(c) => {
                let list: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                write!(f, "series:{}", list.join(","))
            }
        }
    }
}

// ── exact lifts for the verification tracks ─────────────────────────────────

/// Exact-coefficient lifts of the named potentials. Coefficients live in
/// `ExactRational` (rational base point) or in `PolyQ` over the frozen symbol
/// y = tanh t0 (resp. y = tan t0); evaluating the symbol in binary64 happens
/// only after all ring arithmetic is done.
pub mod symbolic {
    use super::*;

    /// N(N+1)(1 - y²) with y the frozen tanh t0 symbol.
    pub fn sech2(n: u32, order: usize) -> Jet<PolyQ> {
        let y0 = PolyQ::var_q(Var::Y);
        let y = jet_tanh_like(y0, order);
        let one = y.one_of();
        let nn = ExactRational::from_int((n as i64) * (n as i64 + 1));
        one.sub(&y.mul(&y)).scale(&Poly::constant(Var::Y, nn))
    }

    /// alpha (1 + y²) with y the frozen tan t0 symbol.
    pub fn sec2(alpha: ExactRational, order: usize) -> Jet<PolyQ> {
        let s0 = PolyQ::var_q(Var::Y);
        let s = jet_tan_like(s0, order);
        let one = s.one_of();
        one.add(&s.mul(&s)).scale(&Poly::constant(Var::Y, alpha))
    }

    /// N(N+1)(1 - y²) at an exact value of y = tanh t0 (e.g. the rational
    /// exactly equal to the binary64 tanh).
    pub fn sech2_at(n: u32, y0: ExactRational, order: usize) -> Jet<ExactRational> {
        let y = jet_tanh_like(y0, order);
        let one = y.one_of();
        let nn = ExactRational::from_int((n as i64) * (n as i64 + 1));
        one.sub(&y.mul(&y)).scale(&nn)
    }

    /// alpha (1 + y²) at an exact value of y = tan t0.
    pub fn sec2_at(alpha: ExactRational, s0: ExactRational, order: usize) -> Jet<ExactRational> {
        let s = jet_tan_like(s0, order);
        let one = s.one_of();
        one.add(&s.mul(&s)).scale(&alpha)
    }

    /// alpha / t² at a rational base point.
    pub fn centrifugal(
        alpha: ExactRational,
        t0: ExactRational,
        order: usize,
    ) -> Result<Jet<ExactRational>> {
        if t0.is_zero() {
            return Err(Error::PotentialPole(0.0));
        }
        let r = jet_recip_linear(t0, order).unwrap();
        Ok(r.mul(&r).scale(&alpha))
    }

    /// u_0(t) = t at a rational base point.
    pub fn linear(t0: ExactRational, order: usize) -> Jet<ExactRational> {
        let mut coeffs = vec![ExactRational::zero(); order + 1];
        coeffs[0] = t0;
        if order >= 1 {
            coeffs[1] = ExactRational::one();
        }
        Jet::new(0.0, coeffs)
    }
}
