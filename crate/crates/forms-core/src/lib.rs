//! Exterior algebra of complex differential forms on a chart of ℂ^{n+1}.
//!
//! Coefficients are closed-form [`ScalarField`] expressions that carry exact
//! Wirtinger derivatives, so the exterior derivative can be applied any number
//! of times. On top of that sit Hermitian metrics, metric contraction, the
//! spin-c Dirac operator `D = ∂̄ − ∂̄*` on `Λ^{0,•}`, the Clifford action of
//! 1-forms, pointwise norms and the 4d Hodge star on 2-forms.

pub mod dirac;
pub mod error;
pub mod fd;
pub mod field;
pub mod form;
pub mod linalg;
pub mod metric;
pub mod par;
pub mod point;
pub mod quad;

pub use dirac::{
    clifford_mul, dirac, hodge_star_2, metric_contract, norm_sq_at, pointwise_norm_sq,
    twisted_dirac,
};
pub use error::FormsError;
pub use field::{Evaluator, RadialProfile, ScalarField, Wirtinger};
pub use form::{exterior_derivative, wedge, BasisKey, FormField};
pub use metric::HermitianMetricField;
pub use num_complex::Complex64;
pub use point::{apply_matrix, sample_tangents, sample_unitaries, ChartPoint, SampleDomain, TangentVector};
