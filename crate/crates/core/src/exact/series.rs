//! Formal series F(z) = Σ_{n≥0} c_n z^{-n-1} with explicit truncation
//! bookkeeping.
//!
//! The z^{-n-1} offset convention is centralized here: a series of `order` K
//! stores c_0..c_{K-1} and is valid through the z^{-K} term. Products of two
//! such series start at z^{-2}; the leading z^{-1} slot of a product is
//! therefore an explicit stored zero.

use crate::error::{Error, Result};
use crate::ring::{DiffRing, Ring};

/// Truncated formal series in 1/z over a coefficient ring.
#[derive(Clone, PartialEq, Debug)]
pub struct FormalSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> FormalSeries<R> {
    /// Series with coefficients c_0..c_{K-1} (valid through z^{-K}).
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        FormalSeries { coeffs }
    }

    /// Number of valid coefficients; the series is valid through z^{-order}.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Coefficient of z^{-n-1}; `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order == 0 || order > self.coeffs.len() {
            return Err(Error::InsufficientOrder {
                need: order,
                have: self.coeffs.len(),
            });
        }
        Ok(FormalSeries {
            coeffs: self.coeffs[..order].to_vec(),
        })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        FormalSeries {
            coeffs: (0..n).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        FormalSeries {
            coeffs: (0..n).map(|k| self.coeffs[k].sub(&rhs.coeffs[k])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn max_magnitude(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.magnitude())
            .fold(0.0, f64::max)
    }

    /// Truncated Cauchy product. The product of two series of this form
    /// starts at z^{-2}; the result's c_0 slot is zero and the valid order is
    /// min(order_a, order_b) + 1.
    pub fn product(&self, rhs: &Self) -> Self {
        let zero = self.coeffs[0].zero_of();
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![zero; n + 1];
        for k in 0..n {
            let mut acc = coeffs[0].zero_of();
            for i in 0..=k {
                acc = acc.add(&self.coeffs[i].mul(&rhs.coeffs[k - i]));
            }
            coeffs[k + 1] = acc;
        }
        FormalSeries { coeffs }
    }

    /// ∂_z: c_n z^{-n-1} maps to -(n+1) c_n z^{-n-2}, i.e. the index map
    /// c_n -> -(n+1) c_n shifted one slot.
    pub fn dz(&self) -> Self {
        let zero = self.coeffs[0].zero_of();
        let mut coeffs = vec![zero];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.mul_nat(n + 1).neg());
        }
        FormalSeries { coeffs }
    }
}

impl<R: DiffRing> FormalSeries<R> {
    /// Coefficient-wise time derivative.
    pub fn dt(&self) -> Self {
        FormalSeries {
            coeffs: self.coeffs.iter().map(|c| c.dt()).collect(),
        }
    }
}

/// Truncated product with an explicit target order.
pub fn series_product<R: Ring>(
    a: &FormalSeries<R>,
    b: &FormalSeries<R>,
    order: usize,
) -> Result<FormalSeries<R>> {
    let full = a.product(b);
    full.truncate(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{PolyQ, Var};
    use crate::ring::Ring;

    #[test]
    fn product_offset_convention() {
        // z^{-1} * z^{-1} = z^{-2}
        let e = FormalSeries::new(vec![1.0f64]);
        let p = e.product(&e);
        assert_eq!(p.coeffs(), &[0.0, 1.0]);
    }

    #[test]
    fn binomial_square_and_truncation() {
        // (t z^{-1} + z^{-2})^2 = t^2 z^{-2} + 2t z^{-3} + z^{-4}
        let t = PolyQ::var_q(Var::T);
        let s = FormalSeries::new(vec![t.clone(), t.one_of()]);
        let sq = s.product(&s);
        assert_eq!(sq.order(), 3);
        assert!(sq.coeff(0).unwrap().is_zero());
        assert_eq!(sq.coeff(1).unwrap(), &t.mul(&t));
        assert_eq!(sq.coeff(2).unwrap(), &t.mul_nat(2));
        // truncation to order 2 keeps only the t^2 z^{-2} term
        let tr = series_product(&s, &s, 2).unwrap();
        assert_eq!(tr.order(), 2);
        assert!(tr.coeff(0).unwrap().is_zero());
        assert_eq!(tr.coeff(1).unwrap(), &t.mul(&t));
        assert!(series_product(&s, &s, 7).is_err());
    }

    #[test]
    fn dz_index_map() {
        // dz(c0 z^{-1} + c1 z^{-2}) = -c0 z^{-2} - 2 c1 z^{-3}
        let s = FormalSeries::new(vec![3.0f64, 5.0]);
        let d = s.dz();
        assert_eq!(d.coeffs(), &[0.0, -3.0, -10.0]);
    }
}
