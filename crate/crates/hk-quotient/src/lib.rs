//! Eguchi-Hanson as the `U(1)` hyperkähler quotient of `ℍ² = ℂ⁴`.
//!
//! Points of the level set are parametrised by `(z₁, z₂, ψ)`; the pullback
//! of half the flat metric splits into the EH metric plus
//! `sF (dψ + i(A − Ā))²`.

mod ambient;
mod embed;
mod error;
mod quaternion;

pub use ambient::{left_u2, moment_maps, quaternion_moment, right_u1, AmbientPoint, MomentMaps};
pub use embed::{
    completed_square, embed, embed_jacobian, extracted_potential, pullback_check,
    pulled_back_metric, quotient_potential, u2_equivariance, FdScheme, LevelSetCoords,
    LevelTangent, PullbackRecord, U2Check,
};
pub use error::HkError;
pub use quaternion::Quaternion;
