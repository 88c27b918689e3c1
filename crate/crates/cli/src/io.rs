//! File schemas shared by the spectral and simulation subcommands.

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use toda_core::sim::{Closure, TodaState};
use toda_core::spectral::{JacobiMatrix, Parity, SpectralData};

/// Matrix file: {"b": [...], "u": [...]} with u the sub-diagonal u_1..u_{N-1}.
#[derive(Serialize, Deserialize)]
pub struct MatrixFile {
    pub b: Vec<f64>,
    pub u: Vec<f64>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<JacobiMatrix> {
        Ok(JacobiMatrix::new(self.b.clone(), self.u.clone())?)
    }

    pub fn from_matrix(j: &JacobiMatrix) -> Self {
        MatrixFile {
            b: j.diag().to_vec(),
            u: j.sub().to_vec(),
        }
    }
}

/// Spectral data file: either explicit nodes and weights, or the per-skew
/// half-spectrum parameterization.
#[derive(Deserialize)]
pub struct SpectralFile {
    #[serde(default)]
    pub x: Option<Vec<f64>>,
    #[serde(default)]
    pub w: Option<Vec<f64>>,
    #[serde(default)]
    pub x_half: Option<Vec<f64>>,
    #[serde(default)]
    pub tau: Option<Vec<f64>>,
    #[serde(default)]
    pub parity: Option<String>,
}

pub enum SpectralInput {
    Weights(SpectralData),
    Tau {
        x_half: Vec<f64>,
        tau: Vec<f64>,
        parity: Parity,
    },
}

impl SpectralFile {
    pub fn parse(self) -> Result<SpectralInput> {
        match (self.x, self.w, self.x_half, self.tau) {
            (Some(x), Some(w), None, None) => Ok(SpectralInput::Weights(SpectralData::new(x, w)?)),
            (None, None, Some(x_half), Some(tau)) => {
                let parity = match self.parity.as_deref() {
                    Some("even") => Parity::Even,
                    Some("odd") => Parity::Odd,
                    other => bail!("parity must be \"even\" or \"odd\", got {other:?}"),
                };
                Ok(SpectralInput::Tau {
                    x_half,
                    tau,
                    parity,
                })
            }
            _ => bail!("expected either {{\"x\", \"w\"}} or {{\"x_half\", \"tau\", \"parity\"}}"),
        }
    }
}

/// Simulation initial state: {"t": r, "closure": "molecule"|"typeB",
/// "b": [...], "u": [...]}. For a molecule, u holds the interior bonds
/// (|u| = |b| - 1); for typeB, the half-lattice couplings (|u| = |b|).
#[derive(Serialize, Deserialize)]
pub struct StateFile {
    #[serde(default)]
    pub t: f64,
    pub closure: String,
    pub b: Vec<f64>,
    pub u: Vec<f64>,
}

impl StateFile {
    pub fn to_state(&self) -> Result<TodaState> {
        match self.closure.as_str() {
            "molecule" => Ok(TodaState::molecule(self.t, self.b.clone(), self.u.clone())?),
            "typeB" => Ok(TodaState::type_b(self.t, self.b.clone(), self.u.clone())?),
            other => bail!("closure must be \"molecule\" or \"typeB\", got {other:?}"),
        }
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {path}"))
}

pub fn closure_name(c: Closure) -> &'static str {
    match c {
        Closure::Molecule => "molecule",
        Closure::TypeBMirror => "typeB",
    }
}
