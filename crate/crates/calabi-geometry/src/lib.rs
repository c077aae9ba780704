//! Ricci-flat Calabi metric `g = F|dz|² + F′|z̄·dz|²` on the canonical bundle
//! of ℂP^n, written on ℂ^{n+1} with `F = (1 + κ/s^{n+1})^{1/(n+1)}`.
//!
//! `n = 1` is Eguchi-Hanson; the formulas here are the general-`n` ones and
//! are cross-checked against the dedicated EH crate in tests.

mod error;
mod forms;
mod metric;
mod profile;

pub use error::CalabiError;
pub use forms::{
    beta_mode, beta_norm_sq, connection_general, kahler_form_general, killing_dual_form,
    killing_identity_residual, l2_form_closed_form, l2_form_general, l2_form_radial_eigenvalue,
    quadratic_identity_residual,
};
pub use metric::{calabi_inverse, calabi_metric, radial_contraction, trace_inverse};
pub use profile::{write_profile_csv, CalabiParams, GeneralProfile, MAX_N};
