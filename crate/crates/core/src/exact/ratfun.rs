//! Reduced rational functions over the exact rationals.
//!
//! Canonical form: numerator and denominator share no common factor and the
//! denominator is monic, so structural equality is mathematical equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::poly::{gcd_q, Poly, PolyQ, Var};
use crate::exact::rational::ExactRational;
use crate::ring::{DiffRing, DivRing, Ring};

/// Quotient of two polynomials in the same variable, stored reduced.
#[derive(Clone, PartialEq)]
pub struct RationalFunction {
    num: PolyQ,
    den: PolyQ,
}

impl RationalFunction {
    pub fn new(num: PolyQ, den: PolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::NotInvertible("zero denominator".into()));
        }
        assert_eq!(num.var(), den.var(), "mixed variables in rational function");
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: PolyQ, den: PolyQ) -> Self {
        let var = num.var();
        if num.is_zero() {
            return RationalFunction {
                num: PolyQ::zero_q(var),
                den: PolyQ::one_q(var),
            };
        }
        let g = gcd_q(&num, &den);
        let (num, den) = if g.degree() > 0 {
            (num.try_div(&g).unwrap(), den.try_div(&g).unwrap())
        } else {
            (num, den)
        };
        // make the denominator monic
        let lead = den.leading().clone();
        let den = den.scale(&ExactRational::one().try_div(&lead).unwrap());
        let num = num.scale(&ExactRational::one().try_div(&lead).unwrap());
        RationalFunction { num, den }
    }

    pub fn from_poly(p: PolyQ) -> Self {
        let one = PolyQ::one_q(p.var());
        RationalFunction { num: p, den: one }
    }

    pub fn zero(var: Var) -> Self {
        Self::from_poly(PolyQ::zero_q(var))
    }

    pub fn constant(var: Var, c: ExactRational) -> Self {
        Self::from_poly(Poly::constant(var, c))
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == 0
    }

    /// Exact evaluation; `None` at a pole.
    pub fn eval(&self, x: &ExactRational) -> Option<ExactRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x).try_div(&d).unwrap())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }
}

impl Ring for RationalFunction {
    fn zero_of(&self) -> Self {
        Self::zero(self.num.var())
    }

    fn one_of(&self) -> Self {
        Self::from_poly(PolyQ::one_q(self.num.var()))
    }

    fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::reduced(num, den)
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn exact_arithmetic() -> bool {
        true
    }
}

impl DivRing for RationalFunction {
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        Some(Self::reduced(
            self.num.mul(&rhs.den),
            self.den.mul(&rhs.num),
        ))
    }
}

impl DiffRing for RationalFunction {
    /// Quotient rule; valid for rational functions of t.
    fn dt(&self) -> Self {
        let num = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        let den = self.den.mul(&self.den);
        Self::reduced(num, den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            let c = self.den.coeff(0);
            if c == ExactRational::one() {
                return write!(f, "{}", self.num);
            }
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num, self.den)
    }
}

/// d/dt log(p/q) = p'/p - q'/q, reduced.
pub fn rational_logderiv(p: &PolyQ, q: &PolyQ) -> Result<RationalFunction> {
    if q.is_zero() {
        return Err(Error::NotInvertible(
            "logarithmic derivative of p/q with q = 0".into(),
        ));
    }
    if p.is_zero() {
        return Err(Error::NotInvertible(
            "logarithmic derivative of p/q with p = 0".into(),
        ));
    }
    let num = p.derivative().mul(q).sub(&q.derivative().mul(p));
    let den = p.mul(q);
    RationalFunction::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_leaves_coprime_parts() {
        // (t^2 - 1) / (t - 1) = t + 1
        let r = RationalFunction::new(
            PolyQ::from_ints(Var::T, &[-1, 0, 1]),
            PolyQ::from_ints(Var::T, &[-1, 1]),
        )
        .unwrap();
        assert_eq!(r.num(), &PolyQ::from_ints(Var::T, &[1, 1]));
        assert!(r.is_polynomial());
        let g = gcd_q(r.num(), r.den());
        assert_eq!(g.degree(), 0);
    }

    #[test]
    fn logderiv_hand_oracle() {
        // d/dt log((t^3-1)/t) = 3t^2/(t^3-1) - 1/t = (2t^3+1)/(t^4-t)
        let r = rational_logderiv(
            &PolyQ::from_ints(Var::T, &[-1, 0, 0, 1]),
            &PolyQ::from_ints(Var::T, &[0, 1]),
        )
        .unwrap();
        assert_eq!(r.num(), &PolyQ::from_ints(Var::T, &[1, 0, 0, 2]));
        assert_eq!(r.den(), &PolyQ::from_ints(Var::T, &[0, -1, 0, 0, 1]));
    }

    #[test]
    fn logderiv_trivial_cases() {
        // p = t, q = 1 -> 1/t
        let r =
            rational_logderiv(&PolyQ::from_ints(Var::T, &[0, 1]), &PolyQ::one_q(Var::T)).unwrap();
        assert_eq!(r.num(), &PolyQ::one_q(Var::T));
        assert_eq!(r.den(), &PolyQ::from_ints(Var::T, &[0, 1]));
        // p = q -> 0
        let p = PolyQ::from_ints(Var::T, &[3, 1, 2]);
        let z = rational_logderiv(&p, &p).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn field_arithmetic_round_trip() {
        let a = RationalFunction::new(
            PolyQ::from_ints(Var::T, &[1, 2]),
            PolyQ::from_ints(Var::T, &[0, 0, 1]),
        )
        .unwrap();
        let b = RationalFunction::new(
            PolyQ::from_ints(Var::T, &[5, 0, 3]),
            PolyQ::from_ints(Var::T, &[1, 1]),
        )
        .unwrap();
        let s = a.add(&b).sub(&b);
        assert_eq!(s, a);
        let p = a.mul(&b).try_div(&b).unwrap();
        assert_eq!(p, a);
    }
}
