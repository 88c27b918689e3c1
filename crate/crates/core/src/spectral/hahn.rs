//! Recurrence coefficients of the monic Hahn polynomials, exact.
//!
//! b_n = A_n + C_n and u_n = A_{n-1} C_n with
//!
//! ```text
//! A_n = (n+α+β+1)(n+α+1)(M-n) / ((2n+α+β+1)(2n+α+β+2))
//! C_n = n(n+β)(n+α+β+M+1) / ((2n+α+β)(2n+α+β+1))
//! ```

use crate::error::{Error, Result};
use crate::exact::rational::ExactRational;
use crate::ring::{DivRing, Ring};

fn q(n: i64) -> ExactRational {
    ExactRational::from_int(n)
}

fn coef_a(alpha: &ExactRational, beta: &ExactRational, m: i64, n: i64) -> Result<ExactRational> {
    let ab = alpha.add(beta);
    let num = q(n)
        .add(&ab)
        .add(&q(1))
        .mul(&q(n).add(alpha).add(&q(1)))
        .mul(&q(m - n));
    let den = q(2 * n)
        .add(&ab)
        .add(&q(1))
        .mul(&q(2 * n).add(&ab).add(&q(2)));
    num.try_div(&den)
        .ok_or_else(|| Error::InvalidInput("degenerate Hahn denominator in A_n".into()))
}

fn coef_c(alpha: &ExactRational, beta: &ExactRational, m: i64, n: i64) -> Result<ExactRational> {
    if n == 0 {
        return Ok(ExactRational::zero());
    }
    let ab = alpha.add(beta);
    let num = q(n)
        .mul(&q(n).add(beta))
        .mul(&q(n).add(&ab).add(&q(m)).add(&q(1)));
    let den = q(2 * n).add(&ab).mul(&q(2 * n).add(&ab).add(&q(1)));
    num.try_div(&den)
        .ok_or_else(|| Error::InvalidInput("degenerate Hahn denominator in C_n".into()))
}

/// (b_n, u_n) of the monic Hahn polynomials; u_0 = 0 by convention.
pub fn hahn_recurrence(
    alpha: &ExactRational,
    beta: &ExactRational,
    m: i64,
    n: i64,
) -> Result<(ExactRational, ExactRational)> {
    if n < 0 || n > m {
        return Err(Error::InvalidInput(format!(
            "Hahn index n = {n} outside 0..={m}"
        )));
    }
    let b = coef_a(alpha, beta, m, n)?.add(&coef_c(alpha, beta, m, n)?);
    let u = if n == 0 {
        ExactRational::zero()
    } else {
        coef_a(alpha, beta, m, n - 1)?.mul(&coef_c(alpha, beta, m, n)?)
    };
    Ok((b, u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_parameters_closed_form() {
        // α = β = 1/2, M = N-1: b_n = (N-1)/2 and u_n = (N+n+1)(N-n)/16
        let half = ExactRational::new(1, 2);
        for n_cap in 2..=6i64 {
            let m = n_cap - 1;
            for n in 0..=m {
                let (b, u) = hahn_recurrence(&half, &half, m, n).unwrap();
                assert_eq!(b, ExactRational::new(n_cap - 1, 2), "b_{n} at N={n_cap}");
                if n >= 1 {
                    let expect = ExactRational::new((n_cap + n + 1) * (n_cap - n), 16);
                    assert_eq!(u, expect, "u_{n} at N={n_cap}");
                }
            }
        }
    }

    #[test]
    fn smallest_case_values() {
        // α = β = 1/2, M = 1: b_0 = 1/2, u_1 = 1/4
        let half = ExactRational::new(1, 2);
        let (b0, _) = hahn_recurrence(&half, &half, 1, 0).unwrap();
        assert_eq!(b0, half);
        let (_, u1) = hahn_recurrence(&half, &half, 1, 1).unwrap();
        assert_eq!(u1, ExactRational::new(1, 4));
    }

    #[test]
    fn hahn_matrix_spectrum_is_integers() {
        // α = β = 1/2, M = 1: J = [[1/2, 1], [1/4, 1/2]] has spectrum {0, 1}
        let half = ExactRational::new(1, 2);
        let (b0, _) = hahn_recurrence(&half, &half, 1, 0).unwrap();
        let (b1, u1) = hahn_recurrence(&half, &half, 1, 1).unwrap();
        let j =
            crate::spectral::JacobiMatrix::new(vec![b0.to_f64(), b1.to_f64()], vec![u1.to_f64()])
                .unwrap();
        let sd = j.eigendecompose().unwrap();
        assert!(sd.x[0].abs() < 1e-12);
        assert!((sd.x[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn out_of_range_rejected() {
        let half = ExactRational::new(1, 2);
        assert!(hahn_recurrence(&half, &half, 1, 2).is_err());
        assert!(hahn_recurrence(&half, &half, 1, -1).is_err());
    }
}
