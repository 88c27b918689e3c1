//! `toda` — one command per verification track: moments and recurrence
//! coefficients from a named potential, rational Painlevé-II solutions,
//! Darboux soliton polynomials, direct and inverse spectral problems for
//! mirrored Jacobi matrices, Toda molecule simulation, the KdV density
//! identification, and the bundled verification suites.
//!
//! Exit codes: 0 success, 1 validation error, 2 verification-suite failure.

mod commands;
mod io;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "toda",
    version,
    about = "Toda chain / orthogonal polynomial toolkit",
    long_about = "Moment tables, Hankel determinants and recurrence coefficients for finite \
                  Toda chains; rational Painlevé-II solutions; soliton polynomials from the \
                  Darboux recursion; per-skew symmetric spectral problems; molecule simulation; \
                  and executable residual checks for every identity in the chain."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recurrence coefficients u_n = H_{n-1}H_{n+1}/H_n², b_n = d/dt log(H_{n+1}/H_n)
    /// of a named potential.
    Coeffs(commands::CoeffsArgs),
    /// The moment chain c_1 = c_0', c_{n+1} = c_n' + (u_0/c_0) Σ c_s c_{n-1-s}
    /// of a named potential.
    Moments(commands::MomentsArgs),
    /// Rational solution V_N = d/dt log(H_{N+1}/H_N) of
    /// V'' = 2V³ - 4tV + 4(α+1/2) at α = N + 1/2, with its residual check.
    Painleve(commands::PainleveArgs),
    /// Soliton polynomial Q_N(z; y) from the Darboux recursion
    /// Q_{N+1} = (z + 2(N+1)y) Q_N - 2(1-y²) ∂_y Q_N, with optional roots.
    Darboux(commands::DarbouxArgs),
    /// Eigenvalues and discrete weights of a Jacobi matrix (direct spectral
    /// problem, Σ w_s = 1 normalization).
    Spectrum(commands::SpectrumArgs),
    /// Jacobi matrix from spectral data: nodes+weights, or the half-spectrum
    /// with τ-parameters of a per-skew symmetric matrix.
    Inverse(commands::InverseArgs),
    /// Integrate a Toda molecule or type-B half-lattice; emits CSV samples
    /// with eigenvalues and conservation diagnostics.
    Simulate(commands::SimulateArgs),
    /// Identification of the KdV densities σ_{m+1} = σ_m' + Σ σ_k σ_{m-k}
    /// with the moments c_{m-1} of the chain built from c_0 = u_0 = -U.
    Kdv(commands::KdvArgs),
    /// Run the bundled verification suites (exit 2 on failure).
    Verify(commands::VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Coeffs(a) => commands::coeffs(a),
        Command::Moments(a) => commands::moments(a),
        Command::Painleve(a) => commands::painleve(a),
        Command::Darboux(a) => commands::darboux(a),
        Command::Spectrum(a) => commands::spectrum(a),
        Command::Inverse(a) => commands::inverse(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::Kdv(a) => commands::kdv(a),
        Command::Verify(a) => return commands::verify(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
