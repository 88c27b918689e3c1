//! Arbitrary-precision rational scalars.
//!
//! Canonical form (reduced, positive denominator) is maintained by the
//! underlying `num` rational; arithmetic is exact, never rounded.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::ring::{DivRing, Ring};

/// Exact rational number with arbitrary-precision numerator and denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExactRational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        ExactRational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(r: BigRational) -> Self {
        ExactRational(r)
    }

    /// The exact rational value of a finite binary64 number.
    pub fn from_f64_exact(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(ExactRational)
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact square root, when both numerator and denominator are perfect
    /// squares (returns the non-negative root).
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.0.numer().sqrt();
        let d = self.0.denom().sqrt();
        if &(&n * &n) == self.0.numer() && &(&d * &d) == self.0.denom() {
            Some(ExactRational(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Canonical `"p/q"` form used in machine-readable output.
    pub fn fraction_string(&self) -> String {
        format!("{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Ring for ExactRational {
    fn zero_of(&self) -> Self {
        Self::zero()
    }
    fn one_of(&self) -> Self {
        Self::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        ExactRational(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        ExactRational(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        ExactRational(&self.0 * &rhs.0)
    }
    fn neg(&self) -> Self {
        ExactRational(-&self.0)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn mul_nat(&self, k: usize) -> Self {
        ExactRational(&self.0 * BigInt::from(k))
    }
    fn magnitude(&self) -> f64 {
        if self.0.is_zero() {
            0.0
        } else {
            self.to_f64().abs().max(f64::MIN_POSITIVE)
        }
    }
    fn prefers_fraction_free() -> bool {
        true
    }
    fn exact_arithmetic() -> bool {
        true
    }
}

impl DivRing for ExactRational {
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.0.is_zero() {
            None
        } else {
            Some(ExactRational(&self.0 / &rhs.0))
        }
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ExactRational {
    type Err = String;

    /// Parses `"p"` or `"p/q"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p
                .trim()
                .parse()
                .map_err(|e| format!("bad numerator: {e}"))?;
            let q: BigInt = q
                .trim()
                .parse()
                .map_err(|e| format!("bad denominator: {e}"))?;
            if q.is_zero() {
                return Err("zero denominator".into());
            }
            Ok(ExactRational(BigRational::new(p, q)))
        } else {
            let p: BigInt = s.parse().map_err(|e| format!("bad integer: {e}"))?;
            Ok(ExactRational(BigRational::from_integer(p)))
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(std::ops::$trait::$method(self.0, rhs.0))
            }
        }
        impl std::ops::$trait for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(std::ops::$trait::$method(&self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl std::ops::Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = ExactRational::new(6, -4);
        assert_eq!(r, ExactRational::new(-3, 2));
        assert_eq!(r.fraction_string(), "-3/2");
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(ExactRational::new(14, 7).to_string(), "2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["5", "-3/7", "0", "22/7"] {
            let r: ExactRational = s.parse().unwrap();
            let back: ExactRational = r.fraction_string().parse().unwrap();
            assert_eq!(r, back);
        }
    }

    #[test]
    fn sqrt_exact_cases() {
        assert_eq!(
            ExactRational::new(9, 4).sqrt_exact(),
            Some(ExactRational::new(3, 2))
        );
        assert_eq!(ExactRational::new(2, 1).sqrt_exact(), None);
        assert_eq!(ExactRational::new(-1, 1).sqrt_exact(), None);
    }
}
