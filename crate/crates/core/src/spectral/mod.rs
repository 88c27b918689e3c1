//! Spectral theory of finite Jacobi matrices in monic normalization, the
//! mirrored type-B/C constructions, per-skew symmetry and its consequences.
//!
//! A per-skew symmetric matrix satisfies A R = -R Aᵀ with R the reversal; the
//! type-B (odd size) and type-C (even size) Toda matrices satisfy the
//! S-conjugated version S R J R S = -Jᵀ with S = diag((-1)^i). Their spectra
//! are symmetric about zero, the weights pair as w_s w_{N-s-1} =
//! h_{N-1}/Ω'(x_s)², and the orthonormal end polynomial pairs as
//! π_{N-1}(x_s) π_{N-1}(x_{N-s-1}) = 1.

mod eig;
mod hahn;
mod inverse;

pub use eig::symmetric_tridiagonal_eig;
pub use hahn::hahn_recurrence;
pub use inverse::{
    extract_tau, inverse_from_weights, perskew_from_tau, perskew_from_tau_exact,
    persymmetric_from_spectrum, Parity,
};

use crate::error::{Error, Result};

/// Origin of a mirrored matrix, for diagnostics only.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChainType {
    TypeB,
    TypeC,
    Generic,
}

/// Tridiagonal matrix in monic normalization: diagonal b_0..b_{N-1},
/// sub-diagonal u_1..u_{N-1}, super-diagonal identically 1.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiMatrix {
    b: Vec<f64>,
    sub: Vec<f64>,
    tag: ChainType,
}

/// Discrete spectral data: ascending eigenvalues with positive weights
/// normalized to Σ w_s = c_0 (default 1).
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData {
    pub x: Vec<f64>,
    pub w: Vec<f64>,
    pub c0: f64,
}

impl SpectralData {
    pub fn new(x: Vec<f64>, w: Vec<f64>) -> Result<Self> {
        if x.len() != w.len() || x.is_empty() {
            return Err(Error::DimensionMismatch(
                "spectral data needs equally many nodes and weights".into(),
            ));
        }
        for pair in x.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::InvalidInput(
                    "nodes must be strictly ascending".into(),
                ));
            }
        }
        if w.iter().any(|&w| w <= 0.0) {
            return Err(Error::InvalidInput("weights must be positive".into()));
        }
        let c0 = w.iter().sum();
        Ok(SpectralData { x, w, c0 })
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Rescale the weights to a new total mass.
    pub fn normalized(&self, c0: f64) -> Self {
        let scale = c0 / self.c0;
        SpectralData {
            x: self.x.clone(),
            w: self.w.iter().map(|w| w * scale).collect(),
            c0,
        }
    }
}

impl JacobiMatrix {
    pub fn new(b: Vec<f64>, sub: Vec<f64>) -> Result<Self> {
        if b.is_empty() || sub.len() + 1 != b.len() {
            return Err(Error::DimensionMismatch(format!(
                "need |sub| = |b| - 1, got |b| = {}, |sub| = {}",
                b.len(),
                sub.len()
            )));
        }
        Ok(JacobiMatrix {
            b,
            sub,
            tag: ChainType::Generic,
        })
    }

    pub fn size(&self) -> usize {
        self.b.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.b
    }

    /// Sub-diagonal entries u_1..u_{N-1}.
    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    pub fn tag(&self) -> ChainType {
        self.tag
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.size();
        let mut m = vec![vec![0.0; n]; n];
        for i in 0..n {
            m[i][i] = self.b[i];
            if i + 1 < n {
                m[i][i + 1] = 1.0;
                m[i + 1][i] = self.sub[i];
            }
        }
        m
    }

    /// Evaluate the monic polynomials P_0..P_N at a point (P_N is the
    /// characteristic polynomial).
    pub fn polynomial_values(&self, x: f64) -> Vec<f64> {
        let n = self.size();
        let mut vals = Vec::with_capacity(n + 1);
        vals.push(1.0);
        vals.push(x - self.b[0]);
        for k in 1..n {
            let u = self.sub[k - 1];
            let next = (x - self.b[k]) * vals[k] - u * vals[k - 1];
            vals.push(next);
        }
        vals
    }

    /// h_{N-1} = u_1 u_2 ... u_{N-1} (the Σ w = 1 normalization).
    pub fn h_last(&self) -> f64 {
        self.sub.iter().product()
    }

    /// Eigenvalues and weights through the symmetrized form; requires all
    /// sub-diagonal entries positive.
    pub fn eigendecompose(&self) -> Result<SpectralData> {
        for (i, &u) in self.sub.iter().enumerate() {
            if u <= 0.0 {
                return Err(Error::NonpositiveOffDiagonal {
                    index: i + 1,
                    value: u,
                });
            }
        }
        let off: Vec<f64> = self.sub.iter().map(|u| u.sqrt()).collect();
        let (x, firsts) = symmetric_tridiagonal_eig(&self.b, &off)?;
        let w: Vec<f64> = firsts.iter().map(|z| z * z).collect();
        Ok(SpectralData { x, w, c0: 1.0 })
    }
}

/// Size-(2N+1) type-B matrix from b_0..b_{N-1}, u_0..u_{N-1}:
/// diag (-b_{N-1}, ..., -b_0, 0, b_0, ..., b_{N-1}), sub-diagonal mirrored
/// through u_n = u_{-1-n}.
pub fn build_typeb(b: &[f64], u: &[f64]) -> Result<JacobiMatrix> {
    let n = b.len();
    if u.len() != n || n == 0 {
        return Err(Error::DimensionMismatch(
            "type B needs b_0..b_{N-1} and u_0..u_{N-1}".into(),
        ));
    }
    let mut diag = Vec::with_capacity(2 * n + 1);
    for i in (0..n).rev() {
        diag.push(-b[i]);
    }
    diag.push(0.0);
    diag.extend_from_slice(b);
    let mut sub = Vec::with_capacity(2 * n);
    for i in (0..n).rev() {
        sub.push(u[i]);
    }
    sub.extend_from_slice(u);
    let mut j = JacobiMatrix::new(diag, sub)?;
    j.tag = ChainType::TypeB;
    Ok(j)
}

/// Size-2N type-C matrix from b_0..b_{N-1}, u_0..u_{N-1}:
/// diag (-b_{N-1}, ..., -b_0, b_0, ..., b_{N-1}), sub-diagonal mirrored
/// through u_n = u_{-n} (center entry u_0).
pub fn build_typec(b: &[f64], u: &[f64]) -> Result<JacobiMatrix> {
    let n = b.len();
    if u.len() != n || n == 0 {
        return Err(Error::DimensionMismatch(
            "type C needs b_0..b_{N-1} and u_0..u_{N-1}".into(),
        ));
    }
    let mut diag = Vec::with_capacity(2 * n);
    for i in (0..n).rev() {
        diag.push(-b[i]);
    }
    diag.extend_from_slice(b);
    let mut sub = Vec::with_capacity(2 * n - 1);
    for i in (1..n).rev() {
        sub.push(u[i]);
    }
    sub.push(u[0]);
    sub.extend_from_slice(&u[1..]);
    let mut j = JacobiMatrix::new(diag, sub)?;
    j.tag = ChainType::TypeC;
    Ok(j)
}

/// Entrywise test of the defining relation S R J R S = -Jᵀ.
pub fn is_per_skew(j: &JacobiMatrix, tol: f64) -> bool {
    let n = j.size();
    let m = j.to_dense();
    let mut max_dev = 0.0f64;
    for i in 0..n {
        for k in 0..n {
            let sign = if (i + k) % 2 == 0 { 1.0 } else { -1.0 };
            let lhs = sign * m[n - 1 - i][n - 1 - k];
            max_dev = max_dev.max((lhs + m[k][i]).abs());
        }
    }
    max_dev <= tol
}

/// Entrywise test of persymmetry A R = R Aᵀ.
pub fn is_persymmetric(j: &JacobiMatrix, tol: f64) -> bool {
    let n = j.size();
    let m = j.to_dense();
    let mut max_dev = 0.0f64;
    for i in 0..n {
        for k in 0..n {
            max_dev = max_dev.max((m[i][k] - m[n - 1 - k][n - 1 - i]).abs());
        }
    }
    max_dev <= tol
}

/// Residuals of the per-skew spectral laws, all relative.
#[derive(Clone, Debug)]
pub struct PerskewReport {
    /// max |x_s + x_{N-s-1}| / spectral scale
    pub sym_x: f64,
    /// max relative deviation in w_s w_{N-s-1} = h_{N-1} / Ω'(x_s)²
    pub ww: f64,
    /// max |π_{N-1}(x_s) π_{N-1}(x_{N-s-1}) - (-1)^{N-1}|
    ///
    /// The parity factor is forced by the persymmetric limit
    /// π_{N-1}(x_s) = (-1)^{N-s-1}: the product over a mirror pair is
    /// (-1)^{N-1}, so even sizes pair to -1 and odd sizes to +1.
    pub pph: f64,
    /// the values π_{N-1}(x_s), ascending in s
    pub pi_values: Vec<f64>,
}

impl PerskewReport {
    pub fn max_dev(&self) -> f64 {
        self.sym_x.max(self.ww).max(self.pph)
    }
}

/// Verify the eigenvalue symmetry, the ww product law and the PPh product
/// law for a per-skew symmetric matrix with positive off-diagonal entries.
///
/// The weight identity is checked in the Σ w_s = c_0 normalization with
/// c_0 = 1 and h_{N-1} = u_1...u_{N-1}; both sides scale the same way under
/// a common mass rescaling, so the check is scale-covariant.
pub fn perskew_property_checks(j: &JacobiMatrix) -> Result<PerskewReport> {
    if !is_per_skew(j, 1e-10) {
        return Err(Error::InvalidInput(
            "matrix does not satisfy the per-skew relation".into(),
        ));
    }
    let n = j.size();
    let sd = j.eigendecompose()?;
    let scale = sd.x.iter().fold(1e-30, |m: f64, x| m.max(x.abs()));
    let mut sym_x = 0.0f64;
    for s in 0..n {
        sym_x = sym_x.max((sd.x[s] + sd.x[n - 1 - s]).abs() / scale);
    }
    let h_last = j.h_last();
    let omega_prime = |s: usize| -> f64 {
        let mut p = 1.0;
        for r in 0..n {
            if r != s {
                p *= sd.x[s] - sd.x[r];
            }
        }
        p
    };
    let mut ww = 0.0f64;
    let mut pph = 0.0f64;
    let sqrt_h = h_last.sqrt();
    let mut pi_values = Vec::with_capacity(n);
    for s in 0..n {
        let rhs = h_last / (omega_prime(s) * omega_prime(s));
        let lhs = sd.w[s] * sd.w[n - 1 - s];
        ww = ww.max((lhs - rhs).abs() / rhs.abs().max(1e-300));
        let pi_s = j.polynomial_values(sd.x[s])[n - 1] / sqrt_h;
        pi_values.push(pi_s);
    }
    // the product law in its square-root-free exact form
    // P_{N-1}(x_s) P_{N-1}(x_{N-s-1}) = (-1)^{N-1} h_{N-1}. The binary64
    // representation of an eigenvalue sitting near a root of P_{N-1} caps
    // the attainable residual around 1e-10, so each eigenvalue is refined by
    // one exact-rational Newton step against the exact characteristic
    // polynomial before the law is evaluated; what remains measures the law
    // itself.
    {
        use crate::exact::rational::ExactRational;
        use crate::ring::{DivRing, Ring};
        let lift = |x: f64| ExactRational::from_f64_exact(x).unwrap();
        let bq: Vec<ExactRational> = j.diag().iter().map(|&v| lift(v)).collect();
        let uq: Vec<ExactRational> = j.sub().iter().map(|&v| lift(v)).collect();
        let mut h_exact = ExactRational::one();
        for u in &uq {
            h_exact = h_exact.mul(u);
        }
        // P_0..P_n values and the derivative of P_n at x, exactly
        let eval_chain = |x: &ExactRational| -> (Vec<ExactRational>, ExactRational) {
            let one = ExactRational::one();
            let mut p = vec![one.clone(), x.sub(&bq[0])];
            let mut dp_prev = ExactRational::zero();
            let mut dp = one;
            for k in 1..n {
                let next = x.sub(&bq[k]).mul(&p[k]).sub(&uq[k - 1].mul(&p[k - 1]));
                let dnext = p[k]
                    .add(&x.sub(&bq[k]).mul(&dp))
                    .sub(&uq[k - 1].mul(&dp_prev));
                p.push(next);
                dp_prev = std::mem::replace(&mut dp, dnext);
            }
            (p, dp)
        };
        let refined: Vec<(ExactRational, ExactRational)> =
            sd.x.iter()
                .map(|&x| {
                    let x0 = lift(x);
                    let (p, dp) = eval_chain(&x0);
                    let x1 = match p[n].try_div(&dp) {
                        Some(step) => x0.sub(&step),
                        None => x0,
                    };
                    let (p, _) = eval_chain(&x1);
                    (x1, p[n - 1].clone())
                })
                .collect();
        // refined eigenvalue symmetry
        let scale_q = scale;
        for s in 0..n {
            let dev = refined[s].0.add(&refined[n - 1 - s].0).to_f64().abs() / scale_q;
            sym_x = sym_x.max(dev);
        }
        let pair_sign = (n - 1) % 2 == 0;
        let signed_h = if pair_sign {
            h_exact.clone()
        } else {
            h_exact.neg()
        };
        for s in 0..n {
            let dev = refined[s]
                .1
                .mul(&refined[n - 1 - s].1)
                .sub(&signed_h)
                .to_f64()
                .abs()
                / h_exact.to_f64();
            pph = pph.max(dev);
        }
    }
    Ok(PerskewReport {
        sym_x,
        ww,
        pph,
        pi_values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn typeb_solitonic_3x3() {
        // sech2(N=1) at t=0: b_0 = 0, u_0 = 2 -> diag(0,0,0), sub(2,2)
        let j = build_typeb(&[0.0], &[2.0]).unwrap();
        assert_eq!(j.diag(), &[0.0, 0.0, 0.0]);
        assert_eq!(j.sub(), &[2.0, 2.0]);
        let sd = j.eigendecompose().unwrap();
        let expect_x = [-2.0, 0.0, 2.0];
        let expect_w = [0.25, 0.5, 0.25];
        for s in 0..3 {
            assert!((sd.x[s] - expect_x[s]).abs() < 1e-12);
            assert!((sd.w[s] - expect_w[s]).abs() < 1e-12);
        }
        assert!(is_per_skew(&j, 1e-14));
        assert!(is_persymmetric(&j, 1e-14)); // b = 0 case: both hold
    }

    #[test]
    fn typeb_zero_chain_and_typec_smallest() {
        let j = build_typeb(&[0.0, 0.0], &[0.0, 0.0]).unwrap();
        assert!(j.diag().iter().all(|&x| x == 0.0));
        assert!(j.sub().iter().all(|&x| x == 0.0));
        // type C, N=1: [[-b0, 1], [u0, b0]]
        let c = build_typec(&[1.0], &[0.8]).unwrap();
        assert_eq!(c.diag(), &[-1.0, 1.0]);
        assert_eq!(c.sub(), &[0.8]);
        assert!(is_per_skew(&c, 1e-14));
    }

    #[test]
    fn eigendecompose_edge_cases() {
        // 1x1 matrix: x = {b_0}, w = {1}
        let j = JacobiMatrix::new(vec![0.7], vec![]).unwrap();
        let sd = j.eigendecompose().unwrap();
        assert_eq!(sd.x, vec![0.7]);
        assert_eq!(sd.w, vec![1.0]);
        // nonpositive off-diagonal entries are rejected
        let j = JacobiMatrix::new(vec![0.0, 0.0], vec![-1.0]).unwrap();
        assert!(j.eigendecompose().is_err());
    }

    #[test]
    fn per_skew_detects_failure() {
        let j = JacobiMatrix::new(vec![1.0, 1.0], vec![1.0]).unwrap();
        assert!(!is_per_skew(&j, 1e-12));
    }

    #[test]
    fn mirrored_random_matrices_are_per_skew() {
        let b = [0.3, -0.7, 1.1, 0.4];
        let u = [1.2, 0.9, 1.7, 0.6];
        let jb = build_typeb(&b, &u).unwrap();
        assert!(is_per_skew(&jb, 1e-14));
        assert_eq!(jb.size(), 9);
        let jc = build_typec(&b, &u).unwrap();
        assert!(is_per_skew(&jc, 1e-14));
        assert_eq!(jc.size(), 8);
    }

    #[test]
    fn perskew_laws_on_solitonic_case() {
        let j = build_typeb(&[0.0], &[2.0]).unwrap();
        let rep = perskew_property_checks(&j).unwrap();
        assert!(rep.max_dev() < 1e-12, "{rep:?}");
        // persymmetric b=0 case: π_{N-1}(x_s) = (-1)^{N-s-1}
        for (s, pi) in rep.pi_values.iter().enumerate() {
            let expect = if (j.size() - 1 - s) % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            assert!((pi - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn perskew_laws_on_random_type_c() {
        let b = [0.4, -0.2, 0.9];
        let u = [1.3, 0.7, 1.9];
        let j = build_typec(&b, &u).unwrap();
        let rep = perskew_property_checks(&j).unwrap();
        assert!(rep.max_dev() < 1e-10, "{rep:?}");
    }

    #[test]
    fn involution_sanity() {
        // applying the S R . R S transform twice returns J
        let j = build_typec(&[0.4, -0.2], &[1.3, 0.7]).unwrap();
        let n = j.size();
        let m = j.to_dense();
        let transform = |a: &Vec<Vec<f64>>| -> Vec<Vec<f64>> {
            let mut out = vec![vec![0.0; n]; n];
            for i in 0..n {
                for k in 0..n {
                    let sign = if (i + k) % 2 == 0 { 1.0 } else { -1.0 };
                    out[i][k] = sign * a[n - 1 - i][n - 1 - k];
                }
            }
            out
        };
        let twice = transform(&transform(&m));
        for i in 0..n {
            for k in 0..n {
                assert!((twice[i][k] - m[i][k]).abs() < 1e-15);
            }
        }
    }
}
