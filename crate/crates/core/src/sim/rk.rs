//! Embedded adaptive Runge-Kutta pair (Dormand-Prince 5(4)) with PI-free
//! step control. The contract is behavioral: local error per step at most
//! `tol` in the mixed absolute/relative norm, deterministic for fixed inputs.

use crate::error::{Error, Result};

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];

const A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];

/// 5th-order weights (the last A row) and the embedded 4th-order weights.
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Integrate dy/dt = f(t, y) from (t0, y0) to t_end with local tolerance
/// `tol`; returns the end state.
pub fn integrate_to(
    f: &impl Fn(f64, &[f64]) -> Vec<f64>,
    t0: f64,
    y0: &[f64],
    t_end: f64,
    tol: f64,
) -> Result<Vec<f64>> {
    if tol <= 0.0 {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let mut t = t0;
    let mut y = y0.to_vec();
    if t_end == t0 {
        return Ok(y);
    }
    let dir = (t_end - t0).signum();
    let mut h = (t_end - t0).abs().min(0.1) * dir;
    let min_step = 1e-14 * (t_end - t0).abs().max(1.0);
    let mut k: Vec<Vec<f64>> = vec![vec![0.0; y.len()]; 7];
    while (t_end - t) * dir > 0.0 {
        if h.abs() > (t_end - t).abs() {
            h = t_end - t;
        }
        if h.abs() < min_step {
            return Err(Error::StepSizeUnderflow(t));
        }
        k[0] = f(t, &y);
        for s in 1..7 {
            let mut ys = y.clone();
            for (j, kj) in k.iter().enumerate().take(s) {
                let a = A[s][j];
                if a != 0.0 {
                    for (yi, ki) in ys.iter_mut().zip(kj) {
                        *yi += h * a * ki;
                    }
                }
            }
            k[s] = f(t + C[s] * h, &ys);
        }
        let mut y5 = y.clone();
        let mut err = 0.0f64;
        for i in 0..y.len() {
            let mut v5 = 0.0;
            let mut v4 = 0.0;
            for s in 0..7 {
                v5 += B5[s] * k[s][i];
                v4 += B4[s] * k[s][i];
            }
            y5[i] = y[i] + h * v5;
            let scale = tol * (1.0 + y[i].abs().max(y5[i].abs()));
            err = err.max((h * (v5 - v4)).abs() / scale);
        }
        if err <= 1.0 {
            t += h;
            y = y5;
        }
        let factor = if err > 0.0 {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        } else {
            5.0
        };
        h *= factor;
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_decay() {
        let f = |_t: f64, y: &[f64]| vec![-y[0]];
        let out = integrate_to(&f, 0.0, &[1.0], 1.0, 1e-12).unwrap();
        assert!((out[0] - (-1.0f64).exp()).abs() < 1e-10);
    }

    #[test]
    fn harmonic_oscillator_energy() {
        let f = |_t: f64, y: &[f64]| vec![y[1], -y[0]];
        let out = integrate_to(&f, 0.0, &[1.0, 0.0], 10.0, 1e-11).unwrap();
        let e = out[0] * out[0] + out[1] * out[1];
        assert!((e - 1.0).abs() < 1e-9);
    }

    #[test]
    fn tolerance_scaling() {
        // halving the tolerance must reduce the end-state error at least by
        // the integrator's order factor margin
        let f = |t: f64, y: &[f64]| vec![t * y[0]];
        let exact = (0.5f64).exp();
        let err_at = |tol: f64| {
            let out = integrate_to(&f, 0.0, &[1.0], 1.0, tol).unwrap();
            (out[0] - exact).abs()
        };
        let coarse = err_at(1e-6);
        let fine = err_at(1e-8);
        assert!(fine < coarse, "coarse {coarse}, fine {fine}");
    }
}
