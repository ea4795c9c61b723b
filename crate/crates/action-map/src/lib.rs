//! The action map for finite-dimensional Grassmann algebras.
//!
//! An action is an even element of the algebra over n conjugate generator
//! pairs, stored as coefficient blocks over ordered index subsets. The map
//! sends such an action G0 through the partition element Z, its logarithm
//! W, and a Legendre transform to the effective action G. This crate
//! provides that map twice: once by brute-force Berezin integration over a
//! doubled algebra with sources, valid for any n up to 5, and once through
//! closed-form matrix expressions for n = 2, 3, 4 built from partition
//! towers, compound matrices, and the star duality. The two routes are kept
//! strictly independent so each can serve as an oracle for the other.

pub mod brute;
pub mod codec;
pub mod closed;
pub mod forms;
pub mod general;
pub mod inverse;
pub mod reduce;
pub mod sample;
pub mod spec;

pub use brute::{
    bruteforce_quadratic_quartic, effective_action_bruteforce, effective_action_element,
    log_partition_element, partition_element, partition_tower,
};
pub use closed::{
    block_tower, closed_form_n2, closed_form_n3, closed_form_n4, sextic_prime_via_fc,
    sextic_prime_via_fd, ClosedForm,
};
pub use codec::{decode_action, encode_action, encode_action_on};
pub use general::general_quadratic_quartic;
pub use inverse::inverse_map;
pub use reduce::reduce_dimension;
pub use sample::{random_invertible, random_spec};
pub use spec::{ActionSpec, EffectiveAction, PartitionTower};

use grassmann_core::CoreError;
use matrix_kit::MatrixError;

#[derive(Debug, thiserror::Error)]
pub enum ActionError {
    #[error("coefficient block has a wrong shape: {0}")]
    BadShape(String),
    #[error("monomial with unequal conjugate counts: {0}")]
    UnbalancedTerm(String),
    #[error("partition element vanishes, no logarithm exists")]
    SingularPartition,
    #[error("quadratic block of the source action is singular")]
    SingularQuadraticBlock,
    #[error("required determinant or partition scalar vanishes: {0}")]
    SingularInput(&'static str),
    #[error("input violates a structural precondition: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
