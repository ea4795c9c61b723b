//! The inverse of the map on the coefficient blocks above the constant.
//!
//! For two and three pairs the map can be undone in closed form: the primed
//! blocks determine the primed tower levels, those determine the original
//! partition scalars, and the original blocks follow. The constant block is
//! not recoverable (the map forgets it), so the result carries zero there.

use grassmann_core::{GrandConstant, Scalar};
use matrix_kit::{adjugate, star, RatMatrix};
use num_traits::{One, Zero};

use crate::spec::{ActionSpec, EffectiveAction};
use crate::ActionError;

fn one_by_one(s: Scalar) -> RatMatrix {
    RatMatrix::from_fn(1, 1, |_, _| s.clone())
}

fn powi(x: &Scalar, k: u32) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Recovers the source action blocks above the constant from an effective
/// action with two or three pairs.
pub fn inverse_map(eff: &EffectiveAction) -> Result<ActionSpec, ActionError> {
    eff.validate()?;
    match eff.n {
        2 => invert_n2(eff),
        3 => invert_n3(eff),
        n => Err(ActionError::BadShape(format!(
            "closed-form inversion covers n = 2 and 3, got n = {n}"
        ))),
    }
}

fn invert_n2(eff: &EffectiveAction) -> Result<ActionSpec, ActionError> {
    let det_p = eff.a2.determinant()?;
    if det_p.is_zero() {
        return Err(ActionError::SingularInput("primed quadratic block is singular"));
    }
    let a4p = eff.a4_ref().get(0, 0).clone();
    let p4sp = &det_p - &a4p;
    if p4sp.is_zero() {
        return Err(ActionError::SingularInput("primed partition scalar vanishes"));
    }
    let ratio = &det_p / &p4sp;
    Ok(ActionSpec {
        n: 2,
        a0: GrandConstant::zero(),
        a2: eff.a2.scale(&ratio),
        a4: Some(one_by_one(&a4p * &ratio * &ratio)),
        a6: None,
        a8: None,
    })
}

fn invert_n3(eff: &EffectiveAction) -> Result<ActionSpec, ActionError> {
    let a2p = &eff.a2;
    let det_p = a2p.determinant()?;
    if det_p.is_zero() {
        return Err(ActionError::SingularInput("primed quadratic block is singular"));
    }
    let a4sp = star(eff.a4_ref(), 2, 3)?;
    let p4sp = adjugate(a2p)?.sub(&a4sp)?;
    let p6sp = &det_p - a4sp.mul(a2p)?.trace()? - eff.a6_ref().get(0, 0);
    let p4sp_a2p = p4sp.mul(a2p)?;
    let two = Scalar::from_integer(2.into());
    let denom = &two * &det_p - &two * p4sp_a2p.trace()?
        + &two / &det_p * adjugate(&p4sp_a2p)?.trace()?
        - &p6sp;
    if denom.is_zero() {
        return Err(ActionError::SingularInput(
            "partition scalar recovery hits a vanishing denominator",
        ));
    }
    let p6s = &det_p * &det_p / &denom;
    let sandwich = a2p.mul(&p4sp)?.mul(a2p)?;
    let a2 = sandwich.scale(&(&p6s / (&det_p * &det_p)));
    let a4s = adjugate(&sandwich)?
        .scale(&(&p6s / powi(&det_p, 3)))
        .sub(&adjugate(a2p)?)?
        .scale(&(&p6s / &det_p));
    let det_a = a2.determinant()?;
    let a6 = &det_a - a4s.mul(&a2)?.trace()? - &p6s;
    Ok(ActionSpec {
        n: 3,
        a0: GrandConstant::zero(),
        a2,
        a4: Some(star(&a4s, 1, 3)?),
        a6: Some(one_by_one(a6)),
        a8: None,
    })
}
