//! Coefficient-ring abstraction shared by the exact and jet tracks.
//!
//! The moment recurrence, Hankel determinants and residual checks are written
//! once, generically, over a small commutative-ring trait. The instantiations
//! used in practice are `f64`, [`crate::ExactRational`], dense polynomials,
//! reduced rational functions, and jets over any of these.

/// Commutative ring with enough structure for the moment/Hankel machinery.
///
/// Identities are produced *from a sample element* (`zero_of`, `one_of`) so
/// that shaped values like jets (which carry a base point and a truncation
/// order) can mint constants compatible with themselves.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero_of(&self) -> Self;
    fn one_of(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// Multiply by a non-negative integer (binary doubling over `add`).
    fn mul_nat(&self, k: usize) -> Self {
        let mut acc = self.zero_of();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.add(&base);
            }
        }
        acc
    }

    /// Numeric size of the element at the evaluation point, used only to
    /// separate structural zeros from floating noise. Exact rings report
    /// 0 or the evaluated magnitude; jets report |j_0|.
    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }

    /// Whether fraction-free elimination (Bareiss) is preferred over cofactor
    /// expansion for determinants over this ring.
    fn prefers_fraction_free() -> bool {
        false
    }

    /// True for rings whose arithmetic never rounds. Zero tests in exact
    /// rings are `is_zero`; tolerance bands against cancellation gauges only
    /// make sense for floating coefficients.
    fn exact_arithmetic() -> bool {
        false
    }
}

/// Rings carrying a derivative with respect to the time variable.
pub trait DiffRing: Ring {
    fn dt(&self) -> Self;
}

/// Rings with (possibly partial) exact division.
///
/// `try_div` returns `None` when `rhs` does not divide `self` exactly (for
/// polynomial rings) or is not invertible (zero, or a jet with vanishing
/// constant term).
pub trait DivRing: Ring {
    fn try_div(&self, rhs: &Self) -> Option<Self>;

    /// Divide by a positive integer.
    fn div_nat(&self, k: usize) -> Self {
        let k_elem = self.one_of().mul_nat(k);
        self.try_div(&k_elem).expect("division by nonzero integer")
    }
}

impl Ring for f64 {
    fn zero_of(&self) -> Self {
        0.0
    }
    fn one_of(&self) -> Self {
        1.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn mul_nat(&self, k: usize) -> Self {
        self * k as f64
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl DivRing for f64 {
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0.0 {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn div_nat(&self, k: usize) -> Self {
        self / k as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_nat_matches_repeated_addition() {
        let x = 1.75f64;
        assert_eq!(x.mul_nat(13), 13.0 * x);
        assert_eq!(x.mul_nat(0), 0.0);
    }
}
