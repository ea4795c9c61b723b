//! Exact calculus in finite-dimensional Grassmann algebras.
//!
//! Generators live in a fixed [`layout::AlgebraLayout`]; multivectors are
//! sparse maps from basis monomials to exact rationals plus a formal grade-0
//! constant that may carry logarithms. On top of the graded product the crate
//! provides left derivatives, Berezin integration, nilpotent exp/log, odd
//! substitution, and the stationarity inversion used by Legendre transforms.

pub mod element;
pub mod grand;
pub mod layout;
pub mod linalg;
pub mod rng;
pub mod scalar;
pub mod stationarity;

pub use element::Element;
pub use grand::GrandConstant;
pub use layout::{AlgebraLayout, Monomial, Sector};
pub use scalar::Scalar;
pub use stationarity::{solve_stationarity, StationaryMap};

use thiserror::Error;

/// Errors raised by Grassmann-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("elements use different algebra layouts")]
    LayoutMismatch,
    #[error("generator is not part of the layout")]
    UnknownGenerator,
    #[error("generator slot listed twice")]
    DuplicateSlot,
    #[error("operand has a nonzero grade-0 part or odd-grade terms")]
    OddOrConstantPart,
    #[error("substitution image is not purely odd")]
    NonOddImage,
    #[error("substitution image uses a slot from the substituted domain")]
    DomainOverlap,
    #[error("quadratic source block is singular")]
    SingularQuadraticBlock,
    #[error("invalid layout: {0}")]
    InvalidLayout(&'static str),
}
