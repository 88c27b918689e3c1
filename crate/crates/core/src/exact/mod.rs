//! Exact arbitrary-precision arithmetic: rationals, dense polynomials,
//! reduced rational functions, formal series in 1/z and exact determinants.

pub mod det;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod series;

pub use det::det_exact;
pub use poly::{Poly, PolyQ, Var};
pub use ratfun::{rational_logderiv, RationalFunction};
pub use rational::ExactRational;
pub use series::FormalSeries;
