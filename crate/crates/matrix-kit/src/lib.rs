//! Exact rational matrices and the subset-indexed constructions used by the
//! closed-form action calculations: compound matrices, the star duality
//! between complementary index orders, and adjugates.

pub mod matrix;
pub mod star;
pub mod subsets;

pub use matrix::RatMatrix;
pub use star::{adjugate, compound, e_matrix, star, supplementary_compound};
pub use subsets::{binomial, complement, k_subsets, subset_position, subset_sign};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("compound order is out of range")]
    BadOrder,
    #[error("matrix size does not match the subset index it claims")]
    SizeMismatch,
    #[error("operand shapes disagree")]
    ShapeMismatch,
}
