//! Named constants used across the crate.
//!
//! Each literal carries at least 20 significant digits. The test suite
//! validates the non-elementary ones against internal computations:
//! `LOG_GLAISHER` against the zeta derivative at -1 and `LOG_TWO_PI`
//! against the zeta derivative at 0.

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.57721566490153286060651209008240243104;

/// ln(2*pi).
pub const LOG_TWO_PI: f64 = 1.83787706640934548356065947281123527973;

/// ln(A) where A is the Glaisher-Kinkelin constant, A = 1.28242712910062263688...
pub const LOG_GLAISHER: f64 = 0.24875447703378426254139606992428240237;

/// zeta(3) (Apery's constant).
pub const ZETA_3: f64 = 1.20205690315959428539973816151144999077;

pub use std::f64::consts::PI;
