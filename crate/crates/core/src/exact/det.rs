//! Exact determinants of small matrices over a coefficient ring.
//!
//! Two kernels: memoized cofactor (Laplace) expansion, which needs only ring
//! operations, and fraction-free Bareiss elimination, whose interior divisions
//! are exact in any integral domain. Entry rings that prefer elimination
//! (exact rationals) or matrices above dimension 8 take the Bareiss path.

use crate::error::{Error, Result};
use crate::ring::{DivRing, Ring};

fn check_square<R>(m: &[Vec<R>]) -> Result<usize> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n}x{n} matrix, found a row of length {}",
                row.len()
            )));
        }
    }
    if n == 0 {
        return Err(Error::DimensionMismatch("empty matrix".into()));
    }
    Ok(n)
}

/// Cofactor expansion with memoization over column subsets.
pub fn det_laplace<R: Ring>(m: &[Vec<R>]) -> Result<R> {
    let n = check_square(m)?;
    let zero = m[0][0].zero_of();
    // minors[mask] = determinant of the top-left |mask| rows on columns in mask
    let mut minors = vec![None::<R>; 1usize << n];
    minors[0] = Some(m[0][0].one_of());
    for mask in 1usize..(1 << n) {
        // expand along the last included row; the cofactor sign is
        // (-1)^(row + position of the column within the mask)
        let row = (mask.count_ones() - 1) as usize;
        let mut acc = zero.clone();
        let mut idx = 0usize;
        for col in 0..n {
            let bit = 1usize << col;
            if mask & bit == 0 {
                continue;
            }
            let entry = &m[row][col];
            if !entry.is_zero() {
                let sub = minors[mask ^ bit]
                    .as_ref()
                    .expect("minor computed in mask order");
                let term = entry.mul(sub);
                acc = if (row + idx) % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            idx += 1;
        }
        minors[mask] = Some(acc);
    }
    Ok(minors[(1 << n) - 1].take().unwrap())
}

/// Fraction-free Bareiss elimination with row pivoting. Every interior
/// division is exact; a failed division indicates the entries do not form an
/// integral domain and is reported as an error.
pub fn det_bareiss<R: Ring + DivRing>(m: &[Vec<R>]) -> Result<R> {
    let n = check_square(m)?;
    let mut a: Vec<Vec<R>> = m.to_vec();
    let mut prev = a[0][0].one_of();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let pivot_row = (k + 1..n).find(|&r| !a[r][k].is_zero());
            match pivot_row {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(a[0][0].zero_of()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.try_div(&prev).ok_or_else(|| {
                    Error::NotInvertible("inexact division in Bareiss elimination".into())
                })?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Exact determinant with the kernel chosen per the entry ring and dimension.
pub fn det_exact<R: Ring + DivRing>(m: &[Vec<R>]) -> Result<R> {
    let n = check_square(m)?;
    if R::prefers_fraction_free() || n > 8 {
        det_bareiss(m)
    } else {
        det_laplace(m)
    }
}
