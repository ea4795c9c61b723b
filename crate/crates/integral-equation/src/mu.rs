//! The squared scale parameter.

use grassmann_core::Scalar;
use num_traits::{One, Signed};

use crate::IntegralError;

/// The square of the generator rescale factor. The coefficient system only
/// involves even powers of the scale, so this one positive rational carries
/// the whole dependence exactly; the scale itself never needs a square root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mu {
    value: Scalar,
}

impl Mu {
    pub fn new(value: Scalar) -> Result<Self, IntegralError> {
        if !value.is_positive() {
            return Err(IntegralError::NonPositiveMu);
        }
        Ok(Mu { value })
    }

    pub fn one() -> Self {
        Mu {
            value: Scalar::one(),
        }
    }

    pub fn value(&self) -> &Scalar {
        &self.value
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// mu^k, the factor in front of the degree-2k block.
    pub fn power(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc *= &self.value;
        }
        acc
    }
}
