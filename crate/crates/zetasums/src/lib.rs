//! Numerics for integrals and sums of products of Hurwitz zeta functions.
//!
//! The crate evaluates each quantity through several independent routes --
//! hypergeometric series, zeta-series expansions, finite closed forms and a
//! tanh-sinh quadrature oracle -- so every result can be cross-validated.
//! All evaluators are pure functions of their arguments; the shared
//! Bernoulli table is immutable after initialization, so everything here is
//! safe for unrestricted concurrent use.

pub mod bernoulli;
mod cli;
pub mod constants;
pub mod double_sums;
pub mod error;
pub mod gamma;
pub mod hurwitz;
pub mod hyp2f1;
pub mod integrals;
pub mod moments;
pub mod quadrature;
pub mod report;
pub mod series;
pub mod suite;
pub mod zeta;

pub use error::{EvalError, Result};
pub use integrals::{Degeneracy, ParameterPair, RepresentationId};
pub use quadrature::{QuadratureConfig, QuadratureResult};
pub use series::{SeriesValue, DEFAULT_TOL, MAX_TERMS};

/// The universal scalar for parameters and results.
pub type Complex = num_complex::Complex64;

/// Shorthand constructor used throughout the crate and its tests.
pub fn cplx(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

/// Entry point for the `zetasums` binary.
pub fn cli_run() -> i32 {
    cli::run()
}
