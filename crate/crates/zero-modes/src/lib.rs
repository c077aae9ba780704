//! Twisted Dirac zero modes in `Λ^{0,1}`.
//!
//! On Eguchi-Hanson the modes are `z₁^{N−m} z₂^{N+m} ∂̄s` times an explicit
//! radial profile; for general `n` the profile involves `f_n`, which is
//! integrated numerically from `s = 1`.

mod classify;
mod eh;
mod error;
mod general;
mod mode;
mod residual;
mod table;

pub use classify::{classify_eh, classify_general, count_eh, multiplet_dim, NormClass};
pub use eh::{eh_norm_sq, eh_profile, eh_zero_mode};
pub use error::ZeroModeError;
pub use general::{general_profile, general_zero_mode, ode_residual, FnProfile};
pub use mode::{EhModeSpec, GeneralModeSpec, ZeroModeSpec};
pub use residual::{max_residual, mode_data, residual_at, ResidualParts};
pub use table::{write_mode_table, ModeRow};
