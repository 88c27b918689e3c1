//! Reflectionless (Bargmann) potentials: the Darboux recursion for the
//! soliton polynomials Q_N(z; y), pole trajectories and their dynamics, the
//! conserved-polynomial fit, the rational-Stieltjes property suite, and the
//! Hahn identification of the t = 0 spectra.

mod darboux;
mod dynamics;
mod report;
mod soliton;

pub use darboux::darboux_general;
pub use dynamics::{conserved_fit, BargmannSolution, ConservedFit};
pub use report::{
    hahn_identification_check, rational_stieltjes_report, HahnIdentification,
    RationalStieltjesReport,
};
pub use soliton::{solitonic_spectrum_at_zero, SolitonPolynomial};
