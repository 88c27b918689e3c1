//! Dense univariate polynomials over a generic coefficient ring.
//!
//! Bivariate polynomials (e.g. the soliton polynomials Q_N(z; y)) are nested:
//! `Poly<Poly<ExactRational>>` with distinct variable tags. Degrees in scope
//! stay small (< ~60 per variable), so dense storage is used throughout.

use std::fmt;

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use crate::exact::rational::ExactRational;
use crate::ring::{DiffRing, DivRing, Ring};

/// Variable tag of a polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Var {
    /// Toda time t.
    T,
    /// Spectral variable z.
    Z,
    /// Orthogonality variable x.
    X,
    /// Auxiliary variable y (e.g. y = tanh t, or the frozen symbol tan t0).
    Y,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::T => "t",
            Var::Z => "z",
            Var::X => "x",
            Var::Y => "y",
        };
        write!(f, "{s}")
    }
}

/// Dense polynomial, coefficients in ascending degree order.
///
/// Invariant: `coeffs` is non-empty and has no trailing zeros beyond index 0;
/// the zero polynomial is stored as a single zero coefficient (and reports
/// degree 0).
#[derive(Clone, PartialEq)]
pub struct Poly<R> {
    var: Var,
    coeffs: Vec<R>,
}

/// Polynomial with exact rational coefficients.
pub type PolyQ = Poly<ExactRational>;

impl<R: Ring> Poly<R> {
    pub fn new(var: Var, coeffs: Vec<R>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "polynomial needs at least one coefficient"
        );
        let mut p = Poly { var, coeffs };
        p.normalize();
        p
    }

    pub fn constant(var: Var, c: R) -> Self {
        Poly {
            var,
            coeffs: vec![c],
        }
    }

    /// The monomial c·x^deg.
    pub fn monomial(var: Var, c: R, deg: usize) -> Self {
        let mut coeffs = vec![c.zero_of(); deg + 1];
        coeffs[deg] = c;
        Poly::new(var, coeffs)
    }

    /// The variable itself, shaped after `proto`.
    pub fn identity(var: Var, proto: &R) -> Self {
        Poly::new(var, vec![proto.zero_of(), proto.one_of()])
    }

    fn normalize(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().is_zero() {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> R {
        if k < self.coeffs.len() {
            self.coeffs[k].clone()
        } else {
            self.coeffs[0].zero_of()
        }
    }

    pub fn leading(&self) -> &R {
        self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == &self.leading().one_of()
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = self.leading().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Horner evaluation into another ring through a coefficient lift.
    pub fn eval_map<S: Ring>(&self, x: &S, lift: impl Fn(&R) -> S) -> S {
        let mut acc = lift(self.leading());
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul(x).add(&lift(c));
        }
        acc
    }

    pub fn map<S: Ring>(&self, var: Var, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(var, self.coeffs.iter().map(f).collect())
    }

    /// Derivative with respect to this polynomial's own variable.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Poly::constant(self.var, self.coeffs[0].zero_of());
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul_nat(k))
            .collect();
        Poly::new(self.var, coeffs)
    }

    pub fn scale(&self, s: &R) -> Self {
        Poly::new(self.var, self.coeffs.iter().map(|c| c.mul(s)).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.coeffs[0].zero_of(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(self.var, coeffs)
    }

    fn check_var(&self, rhs: &Self) {
        assert_eq!(self.var, rhs.var, "mixed polynomial variables");
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero_of(&self) -> Self {
        Poly::constant(self.var, self.coeffs[0].zero_of())
    }

    fn one_of(&self) -> Self {
        Poly::constant(self.var, self.coeffs[0].one_of())
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.coeffs[0].zero_of();
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = rhs.coeffs.get(k).unwrap_or(&zero);
            coeffs.push(a.add(b));
        }
        Poly::new(self.var, coeffs)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check_var(rhs);
        let zero = self.coeffs[0].zero_of();
        if self.is_zero() || rhs.is_zero() {
            return Poly::constant(self.var, zero);
        }
        let mut coeffs = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::new(self.var, coeffs)
    }

    fn neg(&self) -> Self {
        Poly::new(self.var, self.coeffs.iter().map(|c| c.neg()).collect())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    fn magnitude(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.magnitude())
            .fold(0.0, f64::max)
    }

    fn exact_arithmetic() -> bool {
        R::exact_arithmetic()
    }
}

impl<R: DivRing> Poly<R> {
    /// Quotient and remainder; requires the divisor's leading coefficient to
    /// be invertible. Returns `None` otherwise.
    pub fn divrem(&self, rhs: &Self) -> Option<(Self, Self)> {
        self.check_var(rhs);
        if rhs.is_zero() {
            return None;
        }
        let zero = self.coeffs[0].zero_of();
        if self.degree() < rhs.degree() || self.is_zero() {
            return Some((Poly::constant(self.var, zero), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - rhs.degree();
        let mut quot = vec![zero.clone(); dq + 1];
        let lead = rhs.leading();
        for k in (0..=dq).rev() {
            let top = rem[k + rhs.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let q = top.try_div(lead)?;
            for (j, c) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&q.mul(c));
            }
            quot[k] = q;
        }
        rem.truncate(rhs.degree().max(1));
        Some((Poly::new(self.var, quot), Poly::new(self.var, rem)))
    }

    /// Normalize to leading coefficient 1.
    pub fn monic(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let lead = self.leading().clone();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.try_div(&lead))
            .collect::<Option<Vec<_>>>()?;
        Some(Poly::new(self.var, coeffs))
    }
}

impl<R: DivRing> DivRing for Poly<R> {
    /// Exact polynomial division; `None` when the remainder is nonzero.
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.divrem(rhs)?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

/// d/dt for polynomials in the time variable. Only valid for `Var::T`
/// polynomials; enforced at runtime because the trait cannot see the tag.
impl<R: Ring> DiffRing for Poly<R> {
    fn dt(&self) -> Self {
        assert_eq!(self.var, Var::T, "dt on a polynomial not in t");
        self.derivative()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{k}", self.var)?,
            }
        }
        Ok(())
    }
}

impl<R: fmt::Debug> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{:?}; {:?}]", self.var, self.coeffs)
    }
}

impl PolyQ {
    pub fn zero_q(var: Var) -> Self {
        Poly::constant(var, ExactRational::zero())
    }

    pub fn one_q(var: Var) -> Self {
        Poly::constant(var, ExactRational::one())
    }

    /// The variable itself.
    pub fn var_q(var: Var) -> Self {
        Poly::new(var, vec![ExactRational::zero(), ExactRational::one()])
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Poly::new(
            var,
            coeffs.iter().map(|&c| ExactRational::from_int(c)).collect(),
        )
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.eval_map(&x, |c| c.to_f64())
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// Monic gcd of two rational polynomials via the primitive remainder sequence
/// over the integers (controls coefficient growth compared to plain Euclid
/// over the rationals).
pub fn gcd_q(a: &PolyQ, b: &PolyQ) -> PolyQ {
    assert_eq!(
        a.var(),
        b.var(),
        "gcd of polynomials in different variables"
    );
    let var = a.var();
    if a.is_zero() {
        return b.monic().unwrap_or_else(|| PolyQ::one_q(var));
    }
    if b.is_zero() {
        return a.monic().unwrap_or_else(|| PolyQ::one_q(var));
    }
    let mut f = primitive_int_coeffs(a);
    let mut g = primitive_int_coeffs(b);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let r = pseudo_rem(&f, &g);
        if r.iter().all(|c| c.is_zero()) {
            let coeffs = g
                .into_iter()
                .map(|c| ExactRational::from_big(num::BigRational::from_integer(c)))
                .collect();
            return Poly::new(var, coeffs).monic().unwrap();
        }
        f = g;
        g = primitive_part(r);
    }
}

/// Scale to integer coefficients and strip the content.
fn primitive_int_coeffs(p: &PolyQ) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive_part(ints)
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = num::integer::gcd(content, c.abs());
        if content.is_one() {
            return v;
        }
    }
    if content.is_zero() {
        return v;
    }
    for c in &mut v {
        *c = &*c / &content;
    }
    v
}

/// Pseudo-remainder of integer-coefficient polynomials (deg f >= deg g).
fn pseudo_rem(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = f.to_vec();
    let dg = g.len() - 1;
    let lead = g.last().unwrap().clone();
    while rem.len() > dg && !(rem.len() == 1 && rem[0].is_zero()) {
        let dr = rem.len() - 1;
        let top = rem.last().unwrap().clone();
        for c in rem.iter_mut() {
            *c = &*c * &lead;
        }
        for (j, gc) in g.iter().enumerate() {
            rem[dr - dg + j] = &rem[dr - dg + j] - &(&top * gc);
        }
        while rem.len() > 1 && rem.last().unwrap().is_zero() {
            rem.pop();
        }
        if rem.len() - 1 < dg {
            break;
        }
    }
    if rem.len() > dg {
        // degree never dropped; remainder is zero
        vec![BigInt::zero()]
    } else {
        rem
    }
}
