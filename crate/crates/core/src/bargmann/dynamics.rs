//! Pole trajectories a_k(t) of the rational Stieltjes function, their
//! equations of motion and the conserved-polynomial fit.
//!
//! The poles obey
//!
//! ```text
//! a_k'' = a_k a_k' + 2 Σ_{m≠k} a_k' a_m' / (a_k - a_m),
//! ```
//!
//! and the integrals of motion can be packaged as a single polynomial W of
//! degree ≤ N with a_k' Ω'(a_k²) = W(a_k²), Ω(x) = Π_m (x - a_m²); the fit
//! below recovers W from sampled trajectories, its time-independence being
//! the conservation statement.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::jets::PotentialSpec;

use super::soliton::SolitonPolynomial;

/// Continuity-ordered pole trajectories with their velocities.
#[derive(Clone, Debug)]
pub struct BargmannSolution {
    pub n: u32,
    pub times: Vec<f64>,
    /// roots[i][k]: the k-th pole at times[i]
    pub roots: Vec<Vec<f64>>,
    /// analytic velocities da_k/dt (implicit differentiation)
    pub droots: Vec<Vec<f64>>,
}

impl BargmannSolution {
    /// Track the poles of Q_N over a uniform grid on [t_a, t_b]. Roots are
    /// ordered ascending at the first sample and by Newton continuation
    /// afterwards.
    pub fn track(q: &SolitonPolynomial, t_a: f64, t_b: f64, samples: usize) -> Result<Self> {
        assert!(samples >= 2 && t_b > t_a);
        let n = q.n();
        let mut times = Vec::with_capacity(samples);
        let mut roots = Vec::with_capacity(samples);
        let mut droots = Vec::with_capacity(samples);
        let mut current = q.poles(t_a)?;
        for i in 0..samples {
            let t = t_a + (t_b - t_a) * i as f64 / (samples - 1) as f64;
            if i > 0 {
                current = q.refine_roots(t, &current)?;
                let scale = current.iter().fold(1.0f64, |m, r| m.max(r.abs()));
                for w in current.windows(2) {
                    if (w[1] - w[0]).abs() < 1e-8 * scale {
                        return Err(Error::RootCollision(t));
                    }
                }
            }
            let vel: Vec<f64> = current.iter().map(|&a| q.root_velocity(t, a)).collect();
            times.push(t);
            roots.push(current.clone());
            droots.push(vel);
        }
        Ok(BargmannSolution {
            n,
            times,
            roots,
            droots,
        })
    }

    /// Wrap externally produced trajectories (e.g. tracked eigenvalue flows);
    /// velocities by central differences.
    pub fn from_paths(n: u32, times: Vec<f64>, roots: Vec<Vec<f64>>) -> Result<Self> {
        if times.len() != roots.len() || times.len() < 3 {
            return Err(Error::DimensionMismatch(
                "need as many root rows as sample times (at least 3)".into(),
            ));
        }
        let h = times[1] - times[0];
        let m = roots[0].len();
        let n_t = times.len();
        let mut droots = Vec::with_capacity(n_t);
        for i in 0..n_t {
            let mut row = Vec::with_capacity(m);
            for k in 0..m {
                // fourth-order central stencil in the interior, lower order
                // toward the edges
                let d = if i >= 2 && i + 2 < n_t {
                    (roots[i - 2][k] - 8.0 * roots[i - 1][k] + 8.0 * roots[i + 1][k]
                        - roots[i + 2][k])
                        / (12.0 * h)
                } else if i == 0 {
                    (roots[1][k] - roots[0][k]) / h
                } else if i + 1 == n_t {
                    (roots[i][k] - roots[i - 1][k]) / h
                } else {
                    (roots[i + 1][k] - roots[i - 1][k]) / (2.0 * h)
                };
                row.push(d);
            }
            droots.push(row);
        }
        Ok(BargmannSolution {
            n,
            times,
            roots,
            droots,
        })
    }

    pub fn step(&self) -> f64 {
        self.times[1] - self.times[0]
    }

    /// Residues A_k = -da_k/dt at sample i.
    pub fn residues(&self, i: usize) -> Vec<f64> {
        self.droots[i].iter().map(|d| -d).collect()
    }

    /// Σ_k A_k at sample i; equals c_0(t) = N(N+1) sech² t for the solitonic
    /// family.
    pub fn residue_sum(&self, i: usize) -> f64 {
        self.residues(i).iter().sum()
    }

    /// Largest deviation of Σ_k A_k from the solitonic c_0 over all samples.
    pub fn residue_sum_deviation(&self) -> f64 {
        let spec = PotentialSpec::Sech2 { n: self.n };
        self.times
            .iter()
            .enumerate()
            .map(|(i, &t)| (self.residue_sum(i) - spec.value(t)).abs())
            .fold(0.0, f64::max)
    }

    /// Residuals of the pole equations of motion at an interior sample,
    /// with both derivatives taken by fourth-order central differences of
    /// the tracked roots.
    pub fn pole_dynamics_residual(&self, i: usize) -> Result<Vec<f64>> {
        if i < 2 || i + 2 >= self.times.len() {
            return Err(Error::InvalidInput(
                "residual stencil needs two samples on each side".into(),
            ));
        }
        let h = self.step();
        let m = self.roots[0].len();
        let mut out = Vec::with_capacity(m);
        for k in 0..m {
            let a = |j: usize| self.roots[j][k];
            let da = (a(i - 2) - 8.0 * a(i - 1) + 8.0 * a(i + 1) - a(i + 2)) / (12.0 * h);
            let dda = (-a(i - 2) + 16.0 * a(i - 1) - 30.0 * a(i) + 16.0 * a(i + 1) - a(i + 2))
                / (12.0 * h * h);
            let mut coupling = 0.0;
            for mm in 0..m {
                if mm == k {
                    continue;
                }
                let dam = (self.roots[i - 2][mm] - 8.0 * self.roots[i - 1][mm]
                    + 8.0 * self.roots[i + 1][mm]
                    - self.roots[i + 2][mm])
                    / (12.0 * h);
                let gap = a(i) - self.roots[i][mm];
                if gap.abs() < 1e-8 {
                    return Err(Error::RootCollision(self.times[i]));
                }
                coupling += da * dam / gap;
            }
            out.push(dda - a(i) * da - 2.0 * coupling);
        }
        Ok(out)
    }

    /// Largest pole-dynamics residual over all interior samples.
    pub fn max_dynamics_residual(&self) -> Result<f64> {
        let mut max = 0.0f64;
        for i in 2..self.times.len().saturating_sub(2) {
            for r in self.pole_dynamics_residual(i)? {
                max = max.max(r.abs());
            }
        }
        Ok(max)
    }
}

/// Result of the conserved-polynomial fit.
#[derive(Clone, Debug)]
pub struct ConservedFit {
    /// Coefficients w_0..w_N of W(x), ascending.
    pub coeffs: Vec<f64>,
    /// Largest equation residual |a_k' Ω'(a_k²) - W(a_k²)| over the data.
    pub residual: f64,
}

impl ConservedFit {
    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }
}

/// Least-squares fit of a single degree-≤N polynomial W with
/// a_k' Ω'(a_k²) = W(a_k²) across the selected samples. W is fitted freely
/// (not forced monic); its leading coefficient is part of the report.
pub fn conserved_fit(sol: &BargmannSolution, sample_indices: &[usize]) -> Result<ConservedFit> {
    let n = sol.n as usize;
    if sample_indices.is_empty() {
        return Err(Error::InvalidInput("no samples selected".into()));
    }
    let unknowns = n + 1;
    let rows = sample_indices.len() * n;
    if rows < unknowns {
        return Err(Error::InvalidInput(format!(
            "{rows} equations cannot determine {unknowns} coefficients"
        )));
    }
    let mut a = DMatrix::zeros(rows, unknowns);
    let mut rhs = DVector::zeros(rows);
    let mut row = 0;
    for &i in sample_indices {
        let roots = &sol.roots[i];
        let vels = &sol.droots[i];
        for k in 0..n {
            let x = roots[k] * roots[k];
            let mut omega_p = 1.0;
            for m in 0..n {
                if m != k {
                    omega_p *= x - roots[m] * roots[m];
                }
            }
            for j in 0..unknowns {
                a[(row, j)] = x.powi(j as i32);
            }
            rhs[row] = vels[k] * omega_p;
            row += 1;
        }
    }
    // static data (all velocities zero) is consistent with W = 0 even when
    // the design matrix is rank deficient
    if rhs.amax() == 0.0 {
        return Ok(ConservedFit {
            coeffs: vec![0.0; unknowns],
            residual: 0.0,
        });
    }
    let svd = a.clone().svd(true, true);
    let rank = svd.rank(1e-10 * svd.singular_values.max());
    if rank < unknowns {
        return Err(Error::InvalidInput(format!(
            "rank-deficient fit: rank {rank} < {unknowns}"
        )));
    }
    let w = svd
        .solve(&rhs, 1e-12)
        .map_err(|e| Error::RootFinding(e.to_string()))?;
    let residual = (&a * &w - &rhs).abs().max();
    Ok(ConservedFit {
        coeffs: w.iter().copied().collect(),
        residual,
    })
}
