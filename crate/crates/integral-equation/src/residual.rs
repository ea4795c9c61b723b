//! The coefficient system of the rescaling equation.

use action_map::{ActionSpec, EffectiveAction};
use grassmann_core::{GrandConstant, Scalar};
use matrix_kit::RatMatrix;
use num_traits::Zero;

use crate::{IntegralError, Mu};

/// Blockwise differences between an effective action and the rescaled input,
/// one entry per degree. The constant difference is kept separate: it is the
/// additive shift of the equation, free to be nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualSet {
    pub r2: RatMatrix,
    pub r4: Option<RatMatrix>,
    pub r6: Option<RatMatrix>,
    pub r8: Option<Scalar>,
    pub delta_f: GrandConstant,
}

impl ResidualSet {
    /// True when every block above the constant vanishes identically.
    pub fn is_zero_blocks(&self) -> bool {
        self.r2.max_abs().is_zero()
            && self.r4.as_ref().map_or(true, |m| m.max_abs().is_zero())
            && self.r6.as_ref().map_or(true, |m| m.max_abs().is_zero())
            && self.r8.as_ref().map_or(true, |s| s.is_zero())
    }
}

/// The degree-2k blocks of `eff` minus mu^k times those of `spec`, for all
/// k > 0, together with the constant difference. The equation holds at this
/// mu exactly when every returned block is zero.
pub fn rescale_residual(
    spec: &ActionSpec,
    eff: &EffectiveAction,
    mu: &Mu,
) -> Result<ResidualSet, IntegralError> {
    if spec.n != eff.n {
        return Err(IntegralError::ShapeMismatch);
    }
    spec.validate().map_err(|_| IntegralError::ShapeMismatch)?;
    eff.validate().map_err(|_| IntegralError::ShapeMismatch)?;
    let block = |e: &Option<RatMatrix>, s: &Option<RatMatrix>, k: u32| match (e, s) {
        (None, None) => Ok(None),
        (Some(em), Some(sm)) => em
            .sub(&sm.scale(&mu.power(k)))
            .map(Some)
            .map_err(|_| IntegralError::ShapeMismatch),
        _ => Err(IntegralError::ShapeMismatch),
    };
    Ok(ResidualSet {
        r2: eff
            .a2
            .sub(&spec.a2.scale(&mu.power(1)))
            .map_err(|_| IntegralError::ShapeMismatch)?,
        r4: block(&eff.a4, &spec.a4, 2)?,
        r6: block(&eff.a6, &spec.a6, 3)?,
        r8: match (&eff.a8, &spec.a8) {
            (None, None) => None,
            (Some(e8), Some(s8)) => Some(e8 - &(s8 * &mu.power(4))),
            _ => return Err(IntegralError::ShapeMismatch),
        },
        delta_f: eff.a0.sub(&spec.a0),
    })
}
