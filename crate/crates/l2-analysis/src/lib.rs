//! Quadrature-based L² norms with cutoff divergence detection, plus flux
//! integrals of the twisting connection over the generator 2-cycle.
//!
//! Integrals over ℂ^{n+1} use flat Lebesgue measure (the metrics have unit
//! determinant) and are reported on the ℂ^{n+1} cover.

mod angular;
mod error;
mod flux;
mod measure;
mod norms;
mod radial;
mod report;

pub use angular::{angular_average, angular_average_multi, sphere_constant};
pub use error::L2Error;
pub use flux::{flux, flux_with_gauge, section_flux, section_flux_limit, FluxResult, FluxTask};
pub use measure::coordinate_ball_volume;
pub use norms::{
    eh_radial_profile, general_radial_profile, l2_integral_eh, l2_integral_general, l2_norm_form,
    FormKind,
};
pub use radial::{integrate_radial, CutoffOptions, Decay, L2Value, RadialIntegrand};
pub use report::{write_results_csv, write_results_json, L2Row};
