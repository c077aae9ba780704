//! Eguchi-Hanson geometry in the equal-standing coordinates `(z₁, z₂)`:
//! metric and inverse, the profiles `F` and `f`, the Kähler form, the L²
//! harmonic 2-form, the Killing dual `θ₃`, the unitary frame, the twisting
//! connection and conversions to the bundle and bi-axial charts.
//!
//! Everything is built from [`forms_core`] combinators, so derivatives are
//! analytic. `κ = 0` is allowed wherever the formulas make sense and gives
//! flat `ℂ²`.

mod charts;
mod error;
mod forms;
mod frame;
mod metric;
mod profile;

pub use charts::{BiaxialPoint, BundlePoint, EtaForms};
pub use error::EhError;
pub use forms::{connection, connection_potential, kahler_form, l2_form, theta3};
pub use frame::{frame, Frame};
pub use metric::{eh_inverse, eh_metric, metric_at_biaxial, EhParams};
pub use profile::{write_profile_csv, EhProfiles, ProfileRow};
