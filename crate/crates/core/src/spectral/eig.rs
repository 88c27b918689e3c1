//! Symmetric tridiagonal eigensolver: QL with implicit Wilkinson shifts,
//! accumulating only the first row of the rotation product — exactly the
//! data needed for Gauss-type weights (squared first eigenvector components).

use crate::error::{Error, Result};

/// Eigenvalues (ascending) and first components of the orthonormal
/// eigenvectors of the symmetric tridiagonal matrix with diagonal `diag` and
/// off-diagonal `off`.
pub fn symmetric_tridiagonal_eig(diag: &[f64], off: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = diag.len();
    assert_eq!(off.len() + 1, n, "off-diagonal length must be n - 1");
    if n == 1 {
        return Ok((vec![diag[0]], vec![1.0]));
    }
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            // locate a negligible subdiagonal element
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::EigNoConvergence);
            }
            // implicit shift from the 2x2 at the top of the active block
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                // accumulate the first row of the rotation product
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let vals = order.iter().map(|&i| d[i]).collect();
    let firsts = order.iter().map(|&i| z[i]).collect();
    Ok((vals, firsts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solitonic_3x3() {
        // symmetrized [[0,1,0],[2,0,1],[0,2,0]]: off-diag sqrt(2), eigs {-2,0,2}
        let s = 2.0f64.sqrt();
        let (vals, firsts) = symmetric_tridiagonal_eig(&[0.0, 0.0, 0.0], &[s, s]).unwrap();
        let expect = [-2.0, 0.0, 2.0];
        let weights = [0.25, 0.5, 0.25];
        for i in 0..3 {
            assert!((vals[i] - expect[i]).abs() < 1e-14);
            assert!((firsts[i] * firsts[i] - weights[i]).abs() < 1e-14);
        }
    }

    #[test]
    fn first_components_square_to_one() {
        let d = [0.3, -1.2, 2.0, 0.7, -0.4];
        let e = [1.1, 0.6, 0.9, 1.4];
        let (vals, firsts) = symmetric_tridiagonal_eig(&d, &e).unwrap();
        let total: f64 = firsts.iter().map(|z| z * z).sum();
        assert!((total - 1.0).abs() < 1e-12);
        for w in vals.windows(2) {
            assert!(w[0] < w[1]);
        }
        // trace check
        let tr: f64 = vals.iter().sum();
        let expect: f64 = d.iter().sum();
        assert!((tr - expect).abs() < 1e-12);
    }

    #[test]
    fn characteristic_polynomial_root_check() {
        // eigenvalues satisfy det(T - λ) = 0 via the Sturm recurrence
        let d = [1.0, -0.5, 0.25, 2.0];
        let e = [0.7, 1.3, 0.4];
        let (vals, _) = symmetric_tridiagonal_eig(&d, &e).unwrap();
        for &lam in &vals {
            let mut p_prev = 1.0;
            let mut p = d[0] - lam;
            for i in 1..d.len() {
                let next = (d[i] - lam) * p - e[i - 1] * e[i - 1] * p_prev;
                p_prev = p;
                p = next;
            }
            assert!(p.abs() < 1e-9 * (1.0 + lam.abs()).powi(d.len() as i32));
        }
    }
}
