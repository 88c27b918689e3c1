//! Property suites: the rational-Stieltjes consequences (discrete
//! orthogonality, the product form of P_N, the finite moment recurrence, the
//! Hankel collapse and the Vandermonde identity), and the Hahn
//! identification of the t = 0 chains.

use crate::error::{Error, Result};
use crate::exact::det::det_laplace;
use crate::exact::rational::ExactRational;
use crate::ring::Ring;
use crate::spectral::hahn_recurrence;
use crate::toda::{recurrence_from_moments, MomentTable};

use super::dynamics::BargmannSolution;
use super::soliton::solitonic_spectrum_at_zero;

/// Residuals of the rational-Stieltjes consequences at one sample time; all
/// deviations are relative to the natural scale of each identity.
#[derive(Clone, Debug)]
pub struct RationalStieltjesReport {
    /// (i) max |Σ_k A_k P_n(a_k) P_m(a_k) - h_n δ_{nm}| / h-scale, n,m < N
    pub orthogonality: f64,
    /// (ii) max coefficient deviation of P_N from Π_k (x - a_k)
    pub monic_product: f64,
    /// (iv) max |Σ_k B_k c_{n+k}| with B the coefficients of Π (x - a_k)
    pub moment_recurrence: f64,
    /// (v) |H_{N+1}| relative to its Hadamard gauge
    pub hankel_collapse: f64,
    /// (v) relative deviation of H_N from Π A_k Π_{i<k} (a_i - a_k)²
    pub vandermonde: f64,
    /// the discrete moments c_0..c_{2N}
    pub moments: Vec<f64>,
}

impl RationalStieltjesReport {
    pub fn max_dev(&self) -> f64 {
        self.orthogonality
            .max(self.monic_product)
            .max(self.moment_recurrence)
            .max(self.hankel_collapse)
            .max(self.vandermonde)
    }
}

/// Run the property suite on tracked pole data at sample index `i`.
pub fn rational_stieltjes_report(
    sol: &BargmannSolution,
    i: usize,
) -> Result<RationalStieltjesReport> {
    let n = sol.n as usize;
    if n == 0 {
        return Err(Error::InvalidInput("needs at least one pole".into()));
    }
    let a = &sol.roots[i];
    let residues = sol.residues(i);
    let scale_a = a.iter().fold(1.0f64, |m, r| m.max(r.abs()));
    for pair in a.windows(2) {
        if (pair[1] - pair[0]).abs() < 1e-8 * scale_a {
            return Err(Error::RootCollision(sol.times[i]));
        }
    }
    // discrete moments c_n = Σ_k A_k a_k^n for n <= 2N
    let mut moments = Vec::with_capacity(2 * n + 1);
    for p in 0..=2 * n {
        let c: f64 = (0..n).map(|k| residues[k] * a[k].powi(p as i32)).sum();
        moments.push(c);
    }
    let table = MomentTable::from_entries(moments.clone(), moments[0], 1.0);

    // (i) discrete orthogonality through the Gram-built polynomials;
    // pvals[deg][k] = P_deg(a_k) for deg = 0..=N
    let rc = recurrence_from_moments(&table, n - 1)?;
    let mut pvals: Vec<Vec<f64>> = vec![vec![1.0; n]];
    for deg in 0..n {
        let bk = *rc.b_at(deg as i64)?;
        let uk = if deg >= 1 { *rc.u_at(deg as i64)? } else { 0.0 };
        let next: Vec<f64> = (0..n)
            .map(|k| {
                let mut v = (a[k] - bk) * pvals[deg][k];
                if deg >= 1 {
                    v -= uk * pvals[deg - 1][k];
                }
                v
            })
            .collect();
        pvals.push(next);
    }
    let mut h = vec![moments[0]];
    for deg in 1..n {
        h.push(h[deg - 1] * rc.u_at(deg as i64)?);
    }
    let h_scale = h.iter().fold(1e-300f64, |m, v| m.max(v.abs()));
    let mut orthogonality = 0.0f64;
    for p in 0..n {
        for q in 0..n {
            let s: f64 = (0..n)
                .map(|k| residues[k] * pvals[p][k] * pvals[q][k])
                .sum();
            let expect = if p == q { h[p] } else { 0.0 };
            orthogonality = orthogonality.max((s - expect).abs() / h_scale);
        }
    }

    // (ii) P_N = Π (x - a_k): the recurrence-built P_N must vanish at the
    // poles (same roots, both monic of degree N). Since the Stieltjes
    // denominator is Π (z - a_k), this is also the consistency of the
    // rational form's denominator with P_N.
    let prod = poly_from_roots_f64(a);
    let mut monic_product = 0.0f64;
    let prod_scale = prod.iter().fold(1.0f64, |m, c| m.max(c.abs()));
    for k in 0..n {
        monic_product = monic_product.max(pvals[n][k].abs() / prod_scale);
    }

    // (iv) the moments obey the order-N linear recurrence with the
    // coefficients of Π (x - a_k)
    let mut moment_recurrence = 0.0f64;
    for shift in 0..=n {
        let mut s = 0.0;
        let mut gauge = 0.0;
        for (j, bj) in prod.iter().enumerate() {
            s += bj * moments[shift + j];
            gauge += (bj * moments[shift + j]).abs();
        }
        moment_recurrence = moment_recurrence.max(s.abs() / gauge.max(1e-300));
    }

    // (v) H_{N+1} = 0 and H_N = Π A_k Π_{i<k} (a_i - a_k)²
    let hankel = |m: usize| -> Result<(f64, f64)> {
        let mat: Vec<Vec<f64>> = (0..m)
            .map(|i| (0..m).map(|k| moments[i + k]).collect())
            .collect();
        let gauge: f64 = (0..m)
            .map(|i| (0..m).map(|k| moments[i + k].abs()).fold(0.0f64, f64::max))
            .product();
        Ok((det_laplace(&mat)?, gauge))
    };
    let (h_n1, gauge_n1) = hankel(n + 1)?;
    let hankel_collapse = h_n1.abs() / gauge_n1.max(1e-300);
    let (h_n, _) = hankel(n)?;
    let mut vander = residues.iter().product::<f64>();
    for i in 0..n {
        for k in i + 1..n {
            vander *= (a[i] - a[k]) * (a[i] - a[k]);
        }
    }
    let vandermonde = (h_n - vander).abs() / vander.abs().max(1e-300);

    Ok(RationalStieltjesReport {
        orthogonality,
        monic_product,
        moment_recurrence,
        hankel_collapse,
        vandermonde,
        moments,
    })
}

fn poly_from_roots_f64(roots: &[f64]) -> Vec<f64> {
    let mut coeffs = vec![1.0f64];
    for &r in roots {
        let mut next = vec![0.0; coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] -= r * c;
            next[i + 1] += c;
        }
        coeffs = next;
    }
    coeffs
}

/// Exact Hahn identification at t = 0: the chain u_n = (N-n)(N+n+1), b_n = 0
/// matches the monic Hahn coefficients at α = β = 1/2, M = N-1 under the
/// affine spectral map x -> 4x - 2(N-1), which carries {0..N-1} onto the
/// explicit zeros of Q_N(z; 0).
#[derive(Clone, Debug)]
pub struct HahnIdentification {
    /// 16 u_n^{Hahn} = (N-n)(N+n+1) for 1 <= n <= N-1, exactly
    pub u_map_exact: bool,
    /// b_n^{Hahn} = (N-1)/2 for 0 <= n <= N-1, exactly
    pub b_const_exact: bool,
    /// affine image of {0..N-1} equals the explicit Q_N(z; 0) zeros
    pub spectrum_exact: bool,
    /// numeric check: eigenvalues of the t = 0 Jacobi matrix against the
    /// explicit zeros
    pub eigen_dev: f64,
}

impl HahnIdentification {
    pub fn passed(&self, eig_tol: f64) -> bool {
        self.u_map_exact && self.b_const_exact && self.spectrum_exact && self.eigen_dev < eig_tol
    }
}

pub fn hahn_identification_check(n: u32) -> Result<HahnIdentification> {
    if n < 1 {
        return Err(Error::InvalidInput("needs N >= 1".into()));
    }
    let n_i = n as i64;
    let half = ExactRational::new(1, 2);
    let m = n_i - 1;
    let mut u_map_exact = true;
    let mut b_const_exact = true;
    for k in 0..=m {
        let (b, u) = hahn_recurrence(&half, &half, m, k)?;
        if b != ExactRational::new(n_i - 1, 2) {
            b_const_exact = false;
        }
        if k >= 1 {
            // 16 u_k = (N - k)(N + k + 1)
            let expect = ExactRational::from_int((n_i - k) * (n_i + k + 1));
            if u.mul(&ExactRational::from_int(16)) != expect {
                u_map_exact = false;
            }
        }
    }
    // affine map x -> 4x - 2(N-1) on the Hahn spectrum {0..N-1}
    let mapped: Vec<i64> = (0..n_i).map(|s| 4 * s - 2 * (n_i - 1)).collect();
    let spectrum_exact = mapped == solitonic_spectrum_at_zero(n);

    // numeric: eigenvalues of the t = 0 chain (b = 0, u_k = (N-k)(N+k+1))
    let eigen_dev = if n == 1 {
        // 1x1 matrix [0]
        mapped[0].unsigned_abs() as f64
    } else {
        let b = vec![0.0f64; n as usize];
        let sub: Vec<f64> = (1..n_i)
            .map(|k| ((n_i - k) * (n_i + k + 1)) as f64)
            .collect();
        let j = crate::spectral::JacobiMatrix::new(b, sub)?;
        let sd = j.eigendecompose()?;
        sd.x.iter()
            .zip(&mapped)
            .map(|(x, &e)| (x - e as f64).abs())
            .fold(0.0, f64::max)
    };
    Ok(HahnIdentification {
        u_map_exact,
        b_const_exact,
        spectrum_exact,
        eigen_dev,
    })
}
