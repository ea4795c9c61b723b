//! The rescaling integral equation for Grassmann actions.
//!
//! For an action G0 over n conjugate generator pairs, the equation demands
//! that the effective action of G0 coincide with G0 evaluated at rescaled
//! generators, up to an additive constant. Only even powers of the scale
//! enter the coefficients, so the whole problem is exact over the rationals
//! in the squared scale mu: the degree-2k block of the effective action must
//! equal mu^k times the input block, and the constant difference is the
//! additive shift.
//!
//! This crate poses that coefficient system, solves it in closed form for
//! two, three, and four pairs, verifies claimed solutions against the
//! brute-force action map, and runs the two structural analyses that
//! characterize the four-pair fixed points: the eigen-action property under
//! the sourced Berezin transform, and the iterative-root functional
//! equations for the series profile of the action.

pub mod mu;
pub mod residual;
pub mod series;
pub mod solve;
pub mod transform;

pub use mu::Mu;
pub use residual::{rescale_residual, ResidualSet};
pub use series::{
    fixed_point_profile_gaussian, fixed_point_profile_nongaussian, iterative_root_series,
    series_babbage_check, series_iterative_root_check, series_legendre_identity_check,
    TruncSeries,
};
pub use solve::{
    derived_scale_square, primary_consistency_residual, secondary_consistency_residual, solve_n2,
    solve_n3, solve_n4, verify_fixed_point, SolveOutcome,
};
pub use transform::{
    apply_profile, gaussian_source_transform_check, quartic_source_transform_check,
    self_reciprocal_check,
};

use action_map::ActionError;
use grassmann_core::CoreError;
use matrix_kit::MatrixError;

#[derive(Debug, thiserror::Error)]
pub enum IntegralError {
    #[error("coefficient shapes disagree between the action and its image")]
    ShapeMismatch,
    #[error("quadratic block is singular")]
    SingularA2,
    #[error("squared scale must be positive")]
    NonPositiveMu,
    #[error("input violates a structural precondition: {0}")]
    PreconditionViolated(String),
    #[error("series degree is too low for the requested check")]
    InsufficientDegree,
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
