//! Time evolution of finite Toda molecules (standard and type-B mirrored),
//! the perturbed Lax relation, eigenvalue-flow tracking, and the mechanical
//! coordinate picture.
//!
//! Canonical equations throughout:
//!
//! ```text
//! db_k/dt = u_{k+1} - u_k,    du_k/dt = u_k (b_k - b_{k-1}),
//! ```
//!
//! with u_k = exp(q_{k-1} - q_k) and p_k = -b_k in mechanical variables.
//! Molecule closure pins the boundary bonds to zero structurally; type-B
//! closure simulates the half-lattice n >= 0 with the ghost value b_{-1} = 0
//! (so the mirror conditions hold exactly instead of being monitored).

mod rk;

pub use rk::integrate_to;

use crate::error::{Error, Result};
use crate::spectral::JacobiMatrix;

/// Boundary closure of a finite Toda state.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Closure {
    /// Sites 0..M-1 with the bonds at both ends pinned to zero; `u` holds the
    /// M-1 interior bonds.
    Molecule,
    /// Half-lattice b_0..b_M, u_0..u_M with b_{-1} = 0 and u_{M+1} = 0.
    TypeBMirror,
}

/// State of a finite Toda chain at one instant.
#[derive(Clone, Debug)]
pub struct TodaState {
    pub t: f64,
    pub b: Vec<f64>,
    pub u: Vec<f64>,
    pub closure: Closure,
}

impl TodaState {
    pub fn molecule(t: f64, b: Vec<f64>, u: Vec<f64>) -> Result<Self> {
        if b.is_empty() || u.len() + 1 != b.len() {
            return Err(Error::DimensionMismatch(format!(
                "molecule needs |u| = |b| - 1, got |b| = {}, |u| = {}",
                b.len(),
                u.len()
            )));
        }
        Ok(TodaState {
            t,
            b,
            u,
            closure: Closure::Molecule,
        })
    }

    pub fn type_b(t: f64, b: Vec<f64>, u: Vec<f64>) -> Result<Self> {
        if b.is_empty() || u.len() != b.len() {
            return Err(Error::DimensionMismatch(format!(
                "type B needs |u| = |b|, got |b| = {}, |u| = {}",
                b.len(),
                u.len()
            )));
        }
        Ok(TodaState {
            t,
            b,
            u,
            closure: Closure::TypeBMirror,
        })
    }

    fn pack(&self) -> Vec<f64> {
        let mut y = self.b.clone();
        y.extend_from_slice(&self.u);
        y
    }

    fn unpack(&self, y: &[f64], t: f64) -> TodaState {
        let nb = self.b.len();
        TodaState {
            t,
            b: y[..nb].to_vec(),
            u: y[nb..].to_vec(),
            closure: self.closure,
        }
    }

    fn rhs(&self, y: &[f64]) -> Vec<f64> {
        let nb = self.b.len();
        let (b, u) = y.split_at(nb);
        let mut out = Vec::with_capacity(y.len());
        match self.closure {
            Closure::Molecule => {
                // bond i couples sites i and i+1
                for i in 0..nb {
                    let after = if i < nb - 1 { u[i] } else { 0.0 };
                    let before = if i >= 1 { u[i - 1] } else { 0.0 };
                    out.push(after - before);
                }
                for i in 0..u.len() {
                    out.push(u[i] * (b[i + 1] - b[i]));
                }
            }
            Closure::TypeBMirror => {
                for k in 0..nb {
                    let after = if k + 1 < u.len() { u[k + 1] } else { 0.0 };
                    out.push(after - u[k]);
                }
                for k in 0..u.len() {
                    let before = if k >= 1 { b[k - 1] } else { 0.0 };
                    out.push(u[k] * (b[k] - before));
                }
            }
        }
        out
    }

    /// Full mirrored chain (sites, bonds) of a type-B state: the molecule of
    /// 2M+3 sites it represents. Molecule states return their own arrays.
    pub fn full_chain(&self) -> (Vec<f64>, Vec<f64>) {
        match self.closure {
            Closure::Molecule => (self.b.clone(), self.u.clone()),
            Closure::TypeBMirror => {
                let mut b = Vec::with_capacity(2 * self.b.len() + 1);
                for v in self.b.iter().rev() {
                    b.push(-v);
                }
                b.push(0.0);
                b.extend_from_slice(&self.b);
                let mut u = Vec::with_capacity(2 * self.u.len());
                for v in self.u.iter().rev() {
                    u.push(*v);
                }
                u.extend_from_slice(&self.u);
                (b, u)
            }
        }
    }

    /// H = Σ p_k²/2 + Σ exp(q_k - q_{k+1}) of the (full) chain.
    pub fn hamiltonian(&self) -> f64 {
        let (b, u) = self.full_chain();
        b.iter().map(|b| b * b / 2.0).sum::<f64>() + u.iter().sum::<f64>()
    }

    /// The Jacobi window of the perturbed Lax relation (J, source u_0): the
    /// whole matrix for a molecule (u_0 = 0), the sites n >= 0 for a type-B
    /// state (u_0 = u[0]).
    pub fn lax_window(&self) -> Result<(JacobiMatrix, f64)> {
        match self.closure {
            Closure::Molecule => Ok((JacobiMatrix::new(self.b.clone(), self.u.clone())?, 0.0)),
            Closure::TypeBMirror => Ok((
                JacobiMatrix::new(self.b.clone(), self.u[1..].to_vec())?,
                self.u[0],
            )),
        }
    }
}

/// Sampled integration output.
#[derive(Clone, Debug)]
pub struct Trajectory {
    pub closure: Closure,
    pub times: Vec<f64>,
    pub b: Vec<Vec<f64>>,
    pub u: Vec<Vec<f64>>,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn state(&self, i: usize) -> TodaState {
        TodaState {
            t: self.times[i],
            b: self.b[i].clone(),
            u: self.u[i].clone(),
            closure: self.closure,
        }
    }

    /// Largest Hamiltonian deviation from the initial value.
    pub fn hamiltonian_drift(&self) -> f64 {
        let h0 = self.state(0).hamiltonian();
        (0..self.len())
            .map(|i| (self.state(i).hamiltonian() - h0).abs())
            .fold(0.0, f64::max)
    }

    /// Largest violation of the mirror structure (b anti-palindromic, u
    /// palindromic) over all samples; meaningful for molecule runs started
    /// from mirrored data. Type-B runs are mirrored by construction.
    pub fn mirror_drift(&self) -> f64 {
        let mut max = 0.0f64;
        for i in 0..self.len() {
            let (b, u) = self.state(i).full_chain();
            let nb = b.len();
            for j in 0..nb {
                max = max.max((b[j] + b[nb - 1 - j]).abs());
            }
            let nu = u.len();
            for j in 0..nu {
                max = max.max((u[j] - u[nu - 1 - j]).abs());
            }
        }
        max
    }
}

/// Integrate a Toda state to `t_end`, sampling uniformly. Deterministic for
/// fixed (init, t_end, tol, samples).
pub fn simulate(init: &TodaState, t_end: f64, tol: f64, samples: usize) -> Result<Trajectory> {
    if samples < 2 {
        return Err(Error::InvalidInput("need at least two samples".into()));
    }
    if init.u.iter().any(|&u| u < 0.0) {
        return Err(Error::InvalidInput(
            "bond strengths must be nonnegative".into(),
        ));
    }
    let f = |_t: f64, y: &[f64]| init.rhs(y);
    let mut times = Vec::with_capacity(samples);
    let mut bs = Vec::with_capacity(samples);
    let mut us = Vec::with_capacity(samples);
    let mut y = init.pack();
    let mut t = init.t;
    for i in 0..samples {
        let target = init.t + (t_end - init.t) * i as f64 / (samples - 1) as f64;
        y = integrate_to(&f, t, &y, target, tol)?;
        t = target;
        let st = init.unpack(&y, t);
        times.push(t);
        bs.push(st.b);
        us.push(st.u);
    }
    Ok(Trajectory {
        closure: init.closure,
        times,
        b: bs,
        u: us,
    })
}

/// Residual norms of the perturbed Lax relation at sample i:
/// with the source term, ||dJ/dt - [J, A] + u_0 M||_inf, and without it.
/// dJ/dt is taken by fourth-order central differences, so i must be at least
/// two samples from either end.
#[derive(Clone, Debug)]
pub struct LaxReport {
    pub with_source: f64,
    pub without_source: f64,
}

pub fn lax_residual(traj: &Trajectory, i: usize) -> Result<LaxReport> {
    if i < 2 || i + 2 >= traj.len() {
        return Err(Error::InvalidInput(
            "Lax stencil needs two samples on each side".into(),
        ));
    }
    let h = traj.times[1] - traj.times[0];
    let dense = |j: usize| -> Result<Vec<Vec<f64>>> {
        let (jm, _) = traj.state(j).lax_window()?;
        Ok(jm.to_dense())
    };
    let jm2 = dense(i - 2)?;
    let jm1 = dense(i - 1)?;
    let jp1 = dense(i + 1)?;
    let jp2 = dense(i + 2)?;
    let (jmat, u0) = traj.state(i).lax_window()?;
    let j0 = jmat.to_dense();
    let n = j0.len();
    // dJ/dt by the 4th-order stencil
    let mut jdot = vec![vec![0.0; n]; n];
    for r in 0..n {
        for c in 0..n {
            jdot[r][c] = (jm2[r][c] - 8.0 * jm1[r][c] + 8.0 * jp1[r][c] - jp2[r][c]) / (12.0 * h);
        }
    }
    // A = strictly lower triangular part of J
    let mut commutator = vec![vec![0.0; n]; n];
    for r in 0..n {
        for c in 0..n {
            let mut acc = 0.0;
            for k in 0..n {
                let a_kc = if k > c { j0[k][c] } else { 0.0 };
                let a_rk = if r > k { j0[r][k] } else { 0.0 };
                acc += j0[r][k] * a_kc - a_rk * j0[k][c];
            }
            commutator[r][c] = acc;
        }
    }
    let norm_inf = |m: &Vec<Vec<f64>>| -> f64 {
        m.iter()
            .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    };
    let mut pure = vec![vec![0.0; n]; n];
    for r in 0..n {
        for c in 0..n {
            pure[r][c] = jdot[r][c] - commutator[r][c];
        }
    }
    let without_source = norm_inf(&pure);
    pure[0][0] += u0;
    let with_source = norm_inf(&pure);
    Ok(LaxReport {
        with_source,
        without_source,
    })
}

/// Continuity-tracked eigenvalue paths of the Lax window along a trajectory.
#[derive(Clone, Debug)]
pub struct EigenFlow {
    pub times: Vec<f64>,
    /// paths[i][k]: the k-th eigenvalue at times[i]
    pub paths: Vec<Vec<f64>>,
    /// max |λ_k(t) - λ_k(t_0)| over the run
    pub max_drift: f64,
}

pub fn eigenflow(traj: &Trajectory) -> Result<EigenFlow> {
    let mut paths: Vec<Vec<f64>> = Vec::with_capacity(traj.len());
    for i in 0..traj.len() {
        let (jm, _) = traj.state(i).lax_window()?;
        let sd = jm.eigendecompose()?;
        let scale = sd.x.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        for w in sd.x.windows(2) {
            if (w[1] - w[0]).abs() < 1e-8 * scale {
                return Err(Error::EigenvalueCollision(traj.times[i]));
            }
        }
        // ascending order is continuity order while eigenvalues stay simple;
        // verify nearest-neighbor matching against the previous sample
        if let Some(prev) = paths.last() {
            for (k, x) in sd.x.iter().enumerate() {
                let nearest = prev
                    .iter()
                    .enumerate()
                    .min_by(|(_, a), (_, b)| (*a - x).abs().total_cmp(&(*b - x).abs()))
                    .map(|(j, _)| j)
                    .unwrap();
                if nearest != k {
                    return Err(Error::EigenvalueCollision(traj.times[i]));
                }
            }
        }
        paths.push(sd.x);
    }
    let mut max_drift = 0.0f64;
    for i in 0..paths.len() {
        for k in 0..paths[i].len() {
            max_drift = max_drift.max((paths[i][k] - paths[0][k]).abs());
        }
    }
    Ok(EigenFlow {
        times: traj.times.clone(),
        paths,
        max_drift,
    })
}

/// The mechanical picture of a trajectory: positions and momenta
/// reconstructed from u_k = exp(q_{k-1} - q_k), p_k = -b_k, with the
/// anchoring site q = 0 at the mirror site (type-B) or site 0 (molecule).
#[derive(Clone, Debug)]
pub struct CoordinateView {
    pub q: Vec<Vec<f64>>,
    pub p: Vec<Vec<f64>>,
    /// max |q_{-n} + q_n|, |p_{-n} + p_n| across the mirror site; None for
    /// molecule runs (no distinguished site)
    pub antisymmetry_drift: Option<f64>,
    pub hamiltonian: Vec<f64>,
}

pub fn coordinate_view(traj: &Trajectory) -> Result<CoordinateView> {
    let mut qs = Vec::with_capacity(traj.len());
    let mut ps = Vec::with_capacity(traj.len());
    let mut h = Vec::with_capacity(traj.len());
    let mut drift: Option<f64> = match traj.closure {
        Closure::TypeBMirror => Some(0.0),
        Closure::Molecule => None,
    };
    for i in 0..traj.len() {
        let st = traj.state(i);
        let (b, u) = st.full_chain();
        if u.iter().any(|&u| u <= 0.0) {
            return Err(Error::InvalidInput(
                "coordinate view needs positive bond strengths".into(),
            ));
        }
        let nb = b.len();
        // anchor: the mirror site for type-B (middle), site 0 otherwise
        let anchor = match traj.closure {
            Closure::TypeBMirror => nb / 2,
            Closure::Molecule => 0,
        };
        let mut q = vec![0.0; nb];
        for k in anchor + 1..nb {
            q[k] = q[k - 1] - u[k - 1].ln();
        }
        for k in (0..anchor).rev() {
            q[k] = q[k + 1] + u[k].ln();
        }
        let p: Vec<f64> = b.iter().map(|b| -b).collect();
        if let Some(d) = drift.as_mut() {
            for k in 0..nb {
                *d = d.max((q[k] + q[nb - 1 - k]).abs());
                *d = d.max((p[k] + p[nb - 1 - k]).abs());
            }
        }
        h.push(st.hamiltonian());
        qs.push(q);
        ps.push(p);
    }
    Ok(CoordinateView {
        q: qs,
        p: ps,
        antisymmetry_drift: drift,
        hamiltonian: h,
    })
}
