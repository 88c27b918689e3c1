//! Soliton polynomials Q_N(z; y), y = tanh t: the polynomial factors of the
//! wave functions ψ_N = e^{-zt/2} Q_N over the potential N(N+1) sech² t.
//!
//! Each Darboux step shifts N by one:
//!
//! ```text
//! Q_{N+1}(z; y) = (z + 2(N+1) y) Q_N(z; y) - 2 (1 - y²) ∂_y Q_N(z; y),
//! ```
//!
//! producing a polynomial monic in z of degree N+1 and of degree at most
//! N+1 in y.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::exact::poly::{Poly, PolyQ, Var};
use crate::exact::rational::ExactRational;
use crate::jets::Jet;
use crate::ring::Ring;

/// Q_N as a polynomial in z whose coefficients are exact polynomials in y.
#[derive(Clone, Debug, PartialEq)]
pub struct SolitonPolynomial {
    n: u32,
    q: Poly<PolyQ>,
}

impl SolitonPolynomial {
    /// Q_0 = 1.
    pub fn base() -> Self {
        SolitonPolynomial {
            n: 0,
            q: Poly::constant(Var::Z, PolyQ::one_q(Var::Y)),
        }
    }

    /// Apply one Darboux step.
    pub fn darboux_step(&self) -> Self {
        let y = PolyQ::var_q(Var::Y);
        let two_n1 = ExactRational::from_int(2 * (self.n as i64 + 1));
        // (z + 2(N+1) y) Q
        let shifted = self.q.shift_up(1);
        let scaled = self.q.scale(&y.scale(&two_n1));
        // 2 (1 - y²) ∂_y Q
        let dq = self.q.map(Var::Z, |c| c.derivative());
        let one_minus_y2 = PolyQ::from_ints(Var::Y, &[1, 0, -1]);
        let damp = dq.scale(&one_minus_y2.scale(&ExactRational::from_int(2)));
        SolitonPolynomial {
            n: self.n + 1,
            q: shifted.add(&scaled).sub(&damp),
        }
    }

    /// Q_0, Q_1, ..., Q_n.
    pub fn chain(n: u32) -> Vec<Self> {
        let mut out = vec![Self::base()];
        for _ in 0..n {
            out.push(out.last().unwrap().darboux_step());
        }
        out
    }

    pub fn level(n: u32) -> Self {
        Self::chain(n).pop().unwrap()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn poly(&self) -> &Poly<PolyQ> {
        &self.q
    }

    /// Coefficients in z after evaluating y (numeric).
    pub fn eval_y(&self, y: f64) -> Poly<f64> {
        self.q.map(Var::Z, |c| c.eval_f64(y))
    }

    /// Exact polynomial in z at y = 0.
    pub fn at_y_zero(&self) -> PolyQ {
        self.q.map(Var::Z, |c| c.eval(&ExactRational::zero()))
    }

    /// Substitute a numeric z and a jet for y.
    pub fn eval_zy_jet(&self, z: f64, y_jet: &Jet<f64>) -> Jet<f64> {
        let coeffs: Vec<Jet<f64>> = self
            .q
            .coeffs()
            .iter()
            .map(|c| {
                c.eval_map(y_jet, |r| {
                    Jet::constant(y_jet.t0(), r.to_f64(), y_jet.order())
                })
            })
            .collect();
        let mut acc = coeffs.last().unwrap().clone();
        for c in coeffs.iter().rev().skip(1) {
            acc = acc.scale(&z).add(c);
        }
        acc
    }

    /// All N roots of Q_N(·; tanh t), ascending; each must be simple.
    pub fn poles(&self, t: f64) -> Result<Vec<f64>> {
        if self.n == 0 {
            return Ok(vec![]);
        }
        let p = self.eval_y(t.tanh());
        let mut roots = real_roots_companion(&p)?;
        roots.sort_by(f64::total_cmp);
        let scale = roots.iter().fold(1.0f64, |m, r| m.max(r.abs()));
        for pair in roots.windows(2) {
            if (pair[1] - pair[0]).abs() < 1e-8 * scale {
                return Err(Error::RootCollision(t));
            }
        }
        Ok(roots)
    }

    /// One Newton refinement sweep of candidate roots at time t.
    pub fn refine_roots(&self, t: f64, seeds: &[f64]) -> Result<Vec<f64>> {
        let p = self.eval_y(t.tanh());
        let dp = p.derivative();
        let mut out = Vec::with_capacity(seeds.len());
        for &seed in seeds {
            let mut z = seed;
            let mut converged = false;
            for _ in 0..40 {
                let f = p.eval(&z);
                let d = dp.eval(&z);
                if d == 0.0 {
                    break;
                }
                let step = f / d;
                z -= step;
                if step.abs() < 1e-13 * (1.0 + z.abs()) {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(Error::RootFinding(format!(
                    "Newton did not converge from seed {seed} at t = {t}"
                )));
            }
            out.push(z);
        }
        Ok(out)
    }

    /// da_k/dt by implicit differentiation of Q_N(a_k; y(t)) = 0.
    pub fn root_velocity(&self, t: f64, root: f64) -> f64 {
        let y = t.tanh();
        let dy = 1.0 - y * y;
        let p = self.eval_y(y);
        let dz = p.derivative().eval(&root);
        let dyq: f64 = self
            .q
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c.derivative().eval_f64(y) * root.powi(k as i32))
            .sum();
        -dyq * dy / dz
    }
}

/// Real roots of a real polynomial through its companion matrix.
fn real_roots_companion(p: &Poly<f64>) -> Result<Vec<f64>> {
    let n = p.degree();
    if n == 0 {
        return Ok(vec![]);
    }
    let lead = *p.leading();
    if lead == 0.0 {
        return Err(Error::RootFinding("zero leading coefficient".into()));
    }
    let companion = DMatrix::from_fn(n, n, |i, j| {
        if j + 1 == n {
            -p.coeff(i) / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let eigs = companion.complex_eigenvalues();
    let scale = eigs.iter().fold(1.0f64, |m, e| m.max(e.norm()));
    let mut roots = Vec::with_capacity(n);
    for e in eigs.iter() {
        if e.im.abs() > 1e-8 * scale {
            return Err(Error::RootFinding(format!(
                "complex root {} + {}i for a polynomial expected to have real spectrum",
                e.re, e.im
            )));
        }
        roots.push(e.re);
    }
    Ok(roots)
}

/// The explicit t = 0 spectrum of Q_N: the arithmetic progression
/// -2(N-1), -2(N-1)+4, ..., 2(N-1) (so ±(2+4k) for even N and 0, ±4k for
/// odd N).
pub fn solitonic_spectrum_at_zero(n: u32) -> Vec<i64> {
    (0..n as i64).map(|s| 4 * s - 2 * (n as i64 - 1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_of_ints(zcoeffs: &[&[i64]]) -> Poly<PolyQ> {
        Poly::new(
            Var::Z,
            zcoeffs
                .iter()
                .map(|c| PolyQ::from_ints(Var::Y, c))
                .collect(),
        )
    }

    #[test]
    fn first_three_polynomials() {
        let chain = SolitonPolynomial::chain(3);
        // Q_1 = z + 2y
        assert_eq!(chain[1].poly(), &q_of_ints(&[&[0, 2], &[1]]));
        // Q_2 = z² + 6yz + 12y² - 4
        assert_eq!(chain[2].poly(), &q_of_ints(&[&[-4, 0, 12], &[0, 6], &[1]]));
        // Q_3 = z³ + 12yz² + (60y² - 16)z + 120y³ - 72y
        assert_eq!(
            chain[3].poly(),
            &q_of_ints(&[&[0, -72, 0, 120], &[-16, 0, 60], &[0, 12], &[1]])
        );
    }

    #[test]
    fn monic_in_z_with_bounded_y_degree() {
        let q6 = SolitonPolynomial::level(6);
        assert_eq!(q6.poly().degree(), 6);
        assert!(q6.poly().leading().sub(&PolyQ::one_q(Var::Y)).is_zero());
        for (k, c) in q6.poly().coeffs().iter().enumerate() {
            assert!(c.degree() <= 6 - k || c.is_zero());
        }
    }

    #[test]
    fn explicit_zeros_at_t_zero() {
        for n in 1..=6u32 {
            let q = SolitonPolynomial::level(n).at_y_zero();
            let expect = solitonic_spectrum_at_zero(n);
            // exact polynomial identity: Q_N(z; 0) = Π (z - r)
            let mut prod = PolyQ::one_q(Var::Z);
            for r in &expect {
                prod = prod.mul(&PolyQ::from_ints(Var::Z, &[-r, 1]));
            }
            assert_eq!(q, prod, "N = {n}");
        }
    }

    #[test]
    fn poles_numeric_cases() {
        let q2 = SolitonPolynomial::level(2);
        let roots = q2.poles(0.0).unwrap();
        assert!((roots[0] + 2.0).abs() < 1e-10);
        assert!((roots[1] - 2.0).abs() < 1e-10);
        let q3 = SolitonPolynomial::level(3);
        let roots = q3.poles(0.0).unwrap();
        for (r, e) in roots.iter().zip([-4.0, 0.0, 4.0]) {
            assert!((r - e).abs() < 1e-9);
        }
        // Q_1 = z + 2y: single root -2 tanh t
        let q1 = SolitonPolynomial::level(1);
        for t in [-0.7, 0.0, 1.3] {
            let roots = q1.poles(t).unwrap();
            assert!((roots[0] + 2.0 * t.tanh()).abs() < 1e-12);
        }
    }

    #[test]
    fn root_velocity_closed_form() {
        // a = -2 tanh t: da/dt = -2 sech² t
        let q1 = SolitonPolynomial::level(1);
        for t in [0.0f64, 0.4, -0.9] {
            let a = -2.0 * t.tanh();
            let v = q1.root_velocity(t, a);
            let expect = -2.0 * (1.0 - t.tanh() * t.tanh());
            assert!((v - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn wave_function_satisfies_schrodinger() {
        // ψ_N = e^{-zt/2} Q_N solves ψ'' + (N(N+1) sech²t - z²/4) ψ = 0
        use crate::jets::{jet_exp, jet_lift, jet_tanh_like, PotentialSpec};
        for n in 1..=4u32 {
            let q = SolitonPolynomial::level(n);
            for (t0, z) in [(0.3, 0.9), (-0.6, 2.2)] {
                let order = 10;
                let u0 = jet_lift(&PotentialSpec::Sech2 { n }, t0, order).unwrap();
                let y = jet_tanh_like(t0.tanh(), order);
                let y_at = Jet::new(t0, y.coeffs().to_vec());
                let qj = q.eval_zy_jet(z, &y_at);
                let e = jet_exp((-z * t0 / 2.0).exp(), -z / 2.0, order);
                let e_at = Jet::new(t0, e.coeffs().to_vec());
                let psi = e_at.mul(&qj);
                // ψ'' + (u0 - z²/4) ψ
                use crate::ring::DiffRing;
                let res = psi
                    .dt()
                    .dt()
                    .add(&u0.sub(&Jet::constant(t0, z * z / 4.0, order)).mul(&psi));
                assert!(
                    res.max_abs() < 1e-9 * psi.max_abs().max(1.0),
                    "N = {n}, t0 = {t0}, z = {z}: {}",
                    res.max_abs()
                );
            }
        }
    }
}
