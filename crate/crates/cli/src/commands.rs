//! Subcommand implementations.

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Args;
use serde_json::{json, Map, Value};

use toda_core::bargmann::SolitonPolynomial;
use toda_core::exact::poly::PolyQ;
use toda_core::exact::rational::ExactRational;
use toda_core::jets::{jet_lift, symbolic, Jet, PotentialSpec};
use toda_core::painleve::{pii_residual, pii_solution};
use toda_core::ring::Ring;
use toda_core::sim::{coordinate_view, simulate as run_sim, Closure};
use toda_core::spectral::{inverse_from_weights, perskew_from_tau};
use toda_core::toda::{
    kdv_moment_identification, recurrence_from_moments, recurrence_from_moments_hankel, MomentTable,
};
use toda_core::verify::{self, DEFAULT_SEED, SUITE_NAMES};

use crate::io::{closure_name, read_json, MatrixFile, SpectralFile, SpectralInput, StateFile};

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn poly_strings(p: &PolyQ) -> Vec<String> {
    p.coeffs().iter().map(|c| c.fraction_string()).collect()
}

fn seed_from_env() -> u64 {
    std::env::var("TODA_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

// ── coeffs / moments ─────────────────────────────────────────────────────────

#[derive(Args)]
pub struct CoeffsArgs {
    /// Potential: centrifugal:alpha=<r> | sec2:alpha=<r> | sech2:N=<int> |
    /// linear | series:<c0,c1,...>
    #[arg(long)]
    potential: String,
    /// Base point t0
    #[arg(long)]
    t0: f64,
    /// Jet order (number of Taylor coefficients minus one)
    #[arg(long)]
    order: usize,
    /// Highest coefficient index n
    #[arg(long)]
    n: usize,
    /// Exact rational arithmetic (values reported as "p/q" strings)
    #[arg(long)]
    exact: bool,
}

/// Exact jet of the potential: the base point (or its tan/tanh image) enters
/// as the exact rational equal to its binary64 value, so the run is exact
/// and byte-reproducible.
fn exact_jet(spec: &PotentialSpec, t0: f64, order: usize) -> Result<Jet<ExactRational>> {
    let lift =
        |x: f64| ExactRational::from_f64_exact(x).context("non-finite value in potential lift");
    Ok(match spec {
        PotentialSpec::Centrifugal { alpha } => {
            symbolic::centrifugal(lift(*alpha)?, lift(t0)?, order)?
        }
        PotentialSpec::Sec2 { alpha } => {
            if t0.cos().abs() < 1e-12 {
                bail!("sec2 potential has a pole at t0 = {t0}");
            }
            symbolic::sec2_at(lift(*alpha)?, lift(t0.tan())?, order)
        }
        PotentialSpec::Sech2 { n } => symbolic::sech2_at(*n, lift(t0.tanh())?, order),
        PotentialSpec::Linear => symbolic::linear(lift(t0)?, order),
        PotentialSpec::Series(c) => {
            let mut coeffs = Vec::with_capacity(order + 1);
            for k in 0..=order {
                coeffs.push(lift(c.get(k).copied().unwrap_or(0.0))?);
            }
            Jet::new(0.0, coeffs)
        }
    })
}

fn exact_table(
    spec: &PotentialSpec,
    t0: f64,
    order: usize,
    n_max: usize,
) -> Result<MomentTable<Jet<ExactRational>>> {
    if order < n_max {
        bail!("jet order {order} is below the required moment count {n_max}");
    }
    let c0 = exact_jet(spec, t0, order)?;
    // the named family is type B: u_0 = c_0, so the ratio is exactly 1
    let one = c0.one_of();
    Ok(MomentTable::from_initial_with_ratio(
        c0.clone(),
        c0,
        one,
        n_max,
    )?)
}

fn numeric_table(
    spec: &PotentialSpec,
    t0: f64,
    order: usize,
    n_max: usize,
) -> Result<MomentTable<Jet<f64>>> {
    if order < n_max {
        bail!("jet order {order} is below the required moment count {n_max}");
    }
    let j = jet_lift(spec, t0, order)?;
    Ok(MomentTable::from_initial_jets(&j, &j, n_max)?)
}

fn window_map<V: Into<Value>>(range: (i64, i64), mut get: impl FnMut(i64) -> Option<V>) -> Value {
    let mut m = Map::new();
    for n in range.0..=range.1 {
        if let Some(v) = get(n) {
            m.insert(n.to_string(), v.into());
        }
    }
    Value::Object(m)
}

pub fn coeffs(a: CoeffsArgs) -> Result<()> {
    let spec: PotentialSpec = a.potential.parse()?;
    let needed = 2 * a.n + 1;
    if a.order < needed + 1 {
        bail!(
            "coefficients through n = {} need {} moments and a guard: pass --order >= {}",
            a.n,
            needed,
            needed + 1
        );
    }
    let order = a.order;
    let doc = if a.exact {
        let m = exact_table(&spec, a.t0, order, needed)?;
        let rc = recurrence_from_moments_hankel(&m, a.n)?;
        json!({
            "potential": spec.to_string(),
            "t0": a.t0,
            "mode": "exact",
            "u": window_map(rc.u_window(), |n| {
                rc.u_at(n).ok().map(|j| j.value().fraction_string())
            }),
            "b": window_map(rc.b_window(), |n| {
                rc.b_at(n).ok().map(|j| j.value().fraction_string())
            }),
            "truncated_at": rc.truncated_at(),
        })
    } else {
        let m = numeric_table(&spec, a.t0, order, needed)?;
        let rc = recurrence_from_moments(&m, a.n)?;
        json!({
            "potential": spec.to_string(),
            "t0": a.t0,
            "mode": "binary64",
            "u": window_map(rc.u_window(), |n| rc.u_at(n).ok().map(|j| *j.value())),
            "b": window_map(rc.b_window(), |n| rc.b_at(n).ok().map(|j| *j.value())),
            "truncated_at": rc.truncated_at(),
        })
    };
    print_json(&doc);
    Ok(())
}

#[derive(Args)]
pub struct MomentsArgs {
    /// Potential spec (see `coeffs --help`)
    #[arg(long)]
    potential: String,
    #[arg(long)]
    t0: f64,
    /// Jet order
    #[arg(long)]
    order: usize,
    /// Highest moment index
    #[arg(long)]
    n: usize,
    /// Exact rational arithmetic
    #[arg(long)]
    exact: bool,
}

pub fn moments(a: MomentsArgs) -> Result<()> {
    let spec: PotentialSpec = a.potential.parse()?;
    if a.order < a.n + 2 {
        bail!(
            "c_{} consumes {} derivatives of c_0 plus a guard: pass --order >= {}",
            a.n,
            a.n,
            a.n + 2
        );
    }
    let order = a.order;
    let doc = if a.exact {
        let m = exact_table(&spec, a.t0, order, a.n)?;
        let mut entries = Map::new();
        for (k, c) in m.entries().iter().enumerate() {
            let coeffs: Vec<Value> = c
                .coeffs()
                .iter()
                .map(|q| Value::String(q.fraction_string()))
                .collect();
            entries.insert(k.to_string(), Value::Array(coeffs));
        }
        json!({
            "potential": spec.to_string(),
            "t0": a.t0,
            "mode": "exact",
            "c": entries,
        })
    } else {
        let m = numeric_table(&spec, a.t0, order, a.n)?;
        let mut entries = Map::new();
        for (k, c) in m.entries().iter().enumerate() {
            entries.insert(k.to_string(), json!(c.coeffs()));
        }
        json!({
            "potential": spec.to_string(),
            "t0": a.t0,
            "mode": "binary64",
            "c": entries,
        })
    };
    print_json(&doc);
    Ok(())
}

// ── painleve ─────────────────────────────────────────────────────────────────

#[derive(Args)]
pub struct PainleveArgs {
    /// Solution index N (α = N + 1/2)
    #[arg(long = "N")]
    n: u32,
}

pub fn painleve(a: PainleveArgs) -> Result<()> {
    let sol = pii_solution(a.n)?;
    let residual = pii_residual(&sol);
    print_json(&json!({
        "N": a.n,
        "alpha": sol.alpha.fraction_string(),
        "H_N": poly_strings(&sol.h_n),
        "H_N1": poly_strings(&sol.h_n1),
        "V": {
            "num": poly_strings(sol.v.num()),
            "den": poly_strings(sol.v.den()),
        },
        "residual_zero": residual.is_zero(),
    }));
    Ok(())
}

// ── darboux ──────────────────────────────────────────────────────────────────

#[derive(Args)]
pub struct DarbouxArgs {
    /// Level N of the soliton polynomial
    #[arg(long = "N")]
    n: u32,
    /// Evaluation time (y = tanh t)
    #[arg(long)]
    t: Option<f64>,
    /// Also report the roots (and residues) at time t (default t = 0)
    #[arg(long)]
    roots: bool,
}

pub fn darboux(a: DarbouxArgs) -> Result<()> {
    let q = SolitonPolynomial::level(a.n);
    let q_coeffs: Vec<Value> = q
        .poly()
        .coeffs()
        .iter()
        .map(|c| json!(poly_strings(c)))
        .collect();
    let mut doc = json!({
        "N": a.n,
        "Q": q_coeffs,
        "variables": {"outer": "z", "inner": "y = tanh t"},
    });
    if a.t.is_some() || a.roots {
        let t = a.t.unwrap_or(0.0);
        let roots = q.poles(t)?;
        let residues: Vec<f64> = roots.iter().map(|&r| -q.root_velocity(t, r)).collect();
        doc["t"] = json!(t);
        doc["roots"] = json!(roots);
        doc["residues"] = json!(residues);
    }
    print_json(&doc);
    Ok(())
}

// ── spectrum / inverse ───────────────────────────────────────────────────────

#[derive(Args)]
pub struct SpectrumArgs {
    /// Matrix file {"b": [...], "u": [...]} (u = sub-diagonal)
    #[arg(long)]
    file: String,
}

pub fn spectrum(a: SpectrumArgs) -> Result<()> {
    let m: MatrixFile = read_json(&a.file)?;
    let j = m.to_matrix()?;
    let sd = j.eigendecompose()?;
    print_json(&json!({"x": sd.x, "w": sd.w}));
    Ok(())
}

#[derive(Args)]
pub struct InverseArgs {
    /// Spectral data file: {"x": [...], "w": [...]} or
    /// {"x_half": [...], "tau": [...], "parity": "even"|"odd"}
    #[arg(long)]
    file: String,
}

pub fn inverse(a: InverseArgs) -> Result<()> {
    let f: SpectralFile = read_json(&a.file)?;
    let j = match f.parse()? {
        SpectralInput::Weights(sd) => inverse_from_weights(&sd)?,
        SpectralInput::Tau {
            x_half,
            tau,
            parity,
        } => perskew_from_tau(&x_half, &tau, parity)?,
    };
    let out = MatrixFile::from_matrix(&j);
    print_json(&json!({"b": out.b, "u": out.u}));
    Ok(())
}

// ── simulate ─────────────────────────────────────────────────────────────────

#[derive(Args)]
pub struct SimulateArgs {
    /// Initial state file (see README for the schema)
    #[arg(long)]
    init: String,
    /// Final time
    #[arg(long = "t-end")]
    t_end: f64,
    /// Local error tolerance of the adaptive integrator
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Output CSV path
    #[arg(long)]
    out: String,
    /// Number of samples (including both ends)
    #[arg(long, default_value_t = 101)]
    samples: usize,
}

pub fn simulate(a: SimulateArgs) -> Result<()> {
    let f: StateFile = read_json(&a.init)?;
    let init = f.to_state()?;
    let traj = run_sim(&init, a.t_end, a.tol, a.samples)?;
    let eigen_ok = traj.u[0].iter().all(|&u| u > 0.0) || init.closure == Closure::Molecule;
    let flow = if eigen_ok {
        toda_core::sim::eigenflow(&traj).ok()
    } else {
        None
    };
    let n_b = traj.b[0].len();
    let n_u = traj.u[0].len();
    let mut csv = String::new();
    csv.push('t');
    for k in 0..n_b {
        csv.push_str(&format!(",b_{k}"));
    }
    for k in 0..n_u {
        csv.push_str(&format!(",u_{k}"));
    }
    if let Some(flow) = &flow {
        for k in 0..flow.paths[0].len() {
            csv.push_str(&format!(",lambda_{k}"));
        }
    }
    csv.push_str(",energy,mirror_drift\n");
    for i in 0..traj.len() {
        csv.push_str(&format!("{}", traj.times[i]));
        for v in &traj.b[i] {
            csv.push_str(&format!(",{v}"));
        }
        for v in &traj.u[i] {
            csv.push_str(&format!(",{v}"));
        }
        if let Some(flow) = &flow {
            for v in &flow.paths[i] {
                csv.push_str(&format!(",{v}"));
            }
        }
        let st = traj.state(i);
        let (b_full, u_full) = st.full_chain();
        let mut mirror = 0.0f64;
        for j in 0..b_full.len() {
            mirror = mirror.max((b_full[j] + b_full[b_full.len() - 1 - j]).abs());
        }
        for j in 0..u_full.len() {
            mirror = mirror.max((u_full[j] - u_full[u_full.len() - 1 - j]).abs());
        }
        csv.push_str(&format!(",{},{}\n", st.hamiltonian(), mirror));
    }
    std::fs::write(&a.out, csv).with_context(|| format!("writing {}", a.out))?;
    let coord = coordinate_view(&traj).ok();
    print_json(&json!({
        "closure": closure_name(traj.closure),
        "samples": traj.len(),
        "t_end": a.t_end,
        "out": a.out,
        "hamiltonian_drift": traj.hamiltonian_drift(),
        "mirror_drift": traj.mirror_drift(),
        "eigenvalue_drift": flow.as_ref().map(|f| f.max_drift),
        "antisymmetry_drift": coord.and_then(|c| c.antisymmetry_drift),
    }));
    Ok(())
}

// ── kdv ──────────────────────────────────────────────────────────────────────

#[derive(Args)]
pub struct KdvArgs {
    /// Potential u_0 (the Schrödinger potential is U = -u_0)
    #[arg(long)]
    potential: String,
    #[arg(long)]
    t0: f64,
    /// Highest density index m
    #[arg(long)]
    m: usize,
}

pub fn kdv(a: KdvArgs) -> Result<()> {
    if a.m < 1 {
        bail!("m must be at least 1");
    }
    let spec: PotentialSpec = a.potential.parse()?;
    let u0 = jet_lift(&spec, a.t0, a.m + 2)?;
    let rep = kdv_moment_identification(&u0.neg(), a.m)?;
    let dev = rep.max_deviation(|x: &Jet<f64>, y| x.sub(y).max_abs() / x.max_abs().max(1.0));
    print_json(&json!({
        "potential": spec.to_string(),
        "t0": a.t0,
        "m_max": a.m,
        "sigma_values": rep.sigmas.iter().map(|s| *s.value()).collect::<Vec<_>>(),
        "moment_values": rep.moments.entries().iter().map(|c| *c.value()).collect::<Vec<_>>(),
        "max_rel_deviation": dev,
        "identified": dev < 1e-10,
    }));
    Ok(())
}

// ── verify ───────────────────────────────────────────────────────────────────

#[derive(Args)]
pub struct VerifyArgs {
    /// Suite name (darboux | potentials | painleve | kdv | solitonic |
    /// perskew | simulate | poles | series) or "all"
    #[arg(long, default_value = "all")]
    suite: String,
}

pub fn verify(a: VerifyArgs) -> ExitCode {
    let seed = seed_from_env();
    let reports = if a.suite == "all" {
        verify::all_criteria(seed)
    } else {
        match verify::suite_by_name(&a.suite, seed) {
            Some(r) => vec![r],
            None => {
                eprintln!(
                    "error: unknown suite `{}` (expected one of {} or \"all\")",
                    a.suite,
                    SUITE_NAMES.join(", ")
                );
                return ExitCode::from(1);
            }
        }
    };
    let mut failing: Vec<String> = Vec::new();
    for r in &reports {
        print!("{}", r.render());
        for line in &r.lines {
            if !line.passed {
                failing.push(format!("criterion {} / {}", r.id, line.name));
            }
        }
    }
    if failing.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failing properties:");
        for f in &failing {
            eprintln!("  {f}");
        }
        ExitCode::from(2)
    }
}
