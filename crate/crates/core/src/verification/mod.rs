//! Checks of the bounds and of the algebra behind them.

pub mod grid;
pub mod identities;
pub mod inequalities;
pub mod limits;

pub use grid::{run_grid, GridReport, GridRow, GridSpec};
pub use identities::{verify_identity_r2, verify_identity_s2, Identity, ProofIdentityReport};
pub use inequalities::{foster_krasikov_check, laguerre_inequality_check, InequalityReport};
pub use limits::{laguerre_limit_check, LimitReport};
