//! Computational machinery for finite Toda chains and their orthogonal-polynomial
//! description: exact moment/Hankel algebra, truncated-Taylor (jet) arithmetic,
//! Darboux-generated reflectionless potentials, rational Painlevé-II solutions,
//! per-skew symmetric Jacobi spectral theory, and numerical time evolution of
//! Toda molecules.
//!
//! The crate is organised around the chain of identifications
//!
//! ```text
//! (c_0, u_0)  →  moments c_n  →  Hankel determinants H_n  →  coefficients (b_n, u_n)
//!             →  orthogonal polynomials P_n(x; t)  →  Stieltjes series F(z; t)
//! ```
//!
//! with every identity in that chain exposed as an executable residual check.
//! Exact tracks run over arbitrary-precision rationals ([`ExactRational`]),
//! dense polynomials ([`Poly`]) and reduced rational functions
//! ([`RationalFunction`]); numerical tracks run over floating-point jets
//! ([`Jet`]).

pub mod bargmann;
pub mod error;
pub mod exact;
pub mod jets;
pub mod painleve;
pub mod ring;
pub mod sim;
pub mod spectral;
pub mod toda;
pub mod verify;

pub use error::{Error, Result};
pub use exact::poly::{Poly, PolyQ, Var};
pub use exact::ratfun::RationalFunction;
pub use exact::rational::ExactRational;
pub use exact::series::FormalSeries;
pub use jets::{Jet, PotentialSpec};
pub use ring::{DiffRing, DivRing, Ring};
pub use spectral::{JacobiMatrix, SpectralData};
pub use toda::{MomentTable, RecurrenceCoefficients};
