//! Euler-Rayleigh bounds for the extreme zeros of Jacobi, Gegenbauer and
//! Laguerre polynomials, with a certified zero oracle to check them against.

pub mod cli;
pub mod closed_bounds;
pub mod error;
pub mod euler_rayleigh;
pub mod poly_core;
pub mod power_sums;
pub mod render;
pub mod scalar;
pub mod verification;
pub mod zero_oracle;

pub use error::{Error, Result};
pub use poly_core::{GegenbauerParams, JacobiParams, LaguerreParams};
pub use scalar::{Number, Rational, Scalar};
