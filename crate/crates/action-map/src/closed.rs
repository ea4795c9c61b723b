//! Closed-form route: the effective action from matrix algebra alone.
//!
//! For up to four generator pairs the partition scalars of all subsystems
//! are polynomial in the coefficient blocks, and the effective-action blocks
//! come out of determinants, adjugates, compounds, the star duality, and for
//! four pairs the epsilon contraction forms. No Berezin integration happens
//! in this module; the brute-force route lives in [`crate::brute`] and the
//! two stay independent so tests can compare them.

use grassmann_core::{GrandConstant, Scalar};
use matrix_kit::{adjugate, compound, star, RatMatrix};
use num_traits::{One, Zero};

use crate::forms::{f_a, f_c, f_d1, f_d2, f_g};
use crate::spec::{ActionSpec, EffectiveAction, PartitionTower};
use crate::ActionError;

/// Effective action plus the primed partition data the matrix route yields
/// along the way: the full primed partition scalar, the primed quartic and
/// sextic tower levels where the dimension admits them, and the determinant
/// shortcuts for the primed quadratic block and quartic level.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub eff: EffectiveAction,
    pub top_prime: Scalar,
    pub p4_star_prime: Option<RatMatrix>,
    pub p6_star_prime: Option<RatMatrix>,
    pub det_a2_prime: Scalar,
    pub det_p4_star_prime: Option<Scalar>,
}

fn powi(x: &Scalar, k: u32) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

fn one_by_one(s: Scalar) -> RatMatrix {
    RatMatrix::from_fn(1, 1, |_, _| s.clone())
}

/// The partition tower assembled directly from the coefficient blocks, the
/// counting route: every level is polynomial in the blocks. Valid for up to
/// four pairs.
pub fn block_tower(spec: &ActionSpec) -> Result<PartitionTower, ActionError> {
    spec.validate()?;
    let n = spec.n;
    let a2 = &spec.a2;
    let unit = one_by_one(Scalar::one());
    let levels = match n {
        1 => vec![one_by_one(a2.get(0, 0).clone()), unit],
        2 => {
            let p4s = a2.determinant()? - spec.a4_ref().get(0, 0);
            vec![one_by_one(p4s), adjugate(a2)?, unit]
        }
        3 => {
            let a4s = star(spec.a4_ref(), 2, 3)?;
            let p4s = adjugate(a2)?.sub(&a4s)?;
            let p6s = a2.determinant()? - a4s.mul(a2)?.trace()? - spec.a6_ref().get(0, 0);
            vec![one_by_one(p6s), p4s, star(a2, 1, 3)?, unit]
        }
        4 => {
            let a4 = spec.a4_ref();
            let a4s = star(a4, 2, 4)?;
            let a6s = star(spec.a6_ref(), 3, 4)?;
            let c2a = compound(a2, 2)?;
            let p4 = c2a.sub(a4)?;
            let p6s = adjugate(a2)?.sub(&f_a(a2, a4))?.sub(&a6s)?;
            let half = Scalar::new(1.into(), 2.into());
            let p8s = a2.determinant()? - a4s.mul(&c2a)?.trace()?
                + half * a4s.mul(a4)?.trace()?
                - a6s.mul(a2)?.trace()?
                + spec.a8_ref();
            vec![one_by_one(p8s), p6s, star(&p4, 2, 4)?, star(a2, 1, 4)?, unit]
        }
        _ => {
            return Err(ActionError::BadShape(
                "block-assembled towers stop at 4 pairs".into(),
            ))
        }
    };
    Ok(PartitionTower { n, levels })
}

/// Two-pair map: everything reduces to the partition scalar over the
/// determinant of the quadratic block.
pub fn closed_form_n2(spec: &ActionSpec) -> Result<ClosedForm, ActionError> {
    spec.validate()?;
    if spec.n != 2 {
        return Err(ActionError::BadShape(format!("two-pair map got n = {}", spec.n)));
    }
    let det = spec.a2.determinant()?;
    if det.is_zero() {
        return Err(ActionError::SingularInput("determinant of the quadratic block vanishes"));
    }
    let a4v = spec.a4_ref().get(0, 0).clone();
    let p4s = &det - &a4v;
    if p4s.is_zero() {
        return Err(ActionError::SingularInput("partition scalar vanishes"));
    }
    let ratio = &p4s / &det;
    let eff = ActionSpec {
        n: 2,
        a0: GrandConstant::ln_of(&p4s),
        a2: spec.a2.scale(&ratio),
        a4: Some(one_by_one(&a4v * &ratio * &ratio)),
        a6: None,
        a8: None,
    };
    Ok(ClosedForm {
        eff,
        top_prime: powi(&p4s, 3) / (&det * &det),
        p4_star_prime: None,
        p6_star_prime: None,
        det_a2_prime: &p4s * &p4s / &det,
        det_p4_star_prime: None,
    })
}

/// Three-pair map through the quartic tower level and its adjugate.
pub fn closed_form_n3(spec: &ActionSpec) -> Result<ClosedForm, ActionError> {
    spec.validate()?;
    if spec.n != 3 {
        return Err(ActionError::BadShape(format!("three-pair map got n = {}", spec.n)));
    }
    let a2 = &spec.a2;
    let a4s = star(spec.a4_ref(), 2, 3)?;
    let p4s = adjugate(a2)?.sub(&a4s)?;
    let det4 = p4s.determinant()?;
    if det4.is_zero() {
        return Err(ActionError::SingularInput("quartic tower level is singular"));
    }
    let p6s = a2.determinant()? - a4s.mul(a2)?.trace()? - spec.a6_ref().get(0, 0);
    if p6s.is_zero() {
        return Err(ActionError::SingularInput("partition scalar vanishes"));
    }
    let p4a = p4s.mul(a2)?;
    let tr_p4a = p4a.trace()?;
    let tr_adj_p4a = adjugate(&p4a)?.trace()?;
    let a2p = adjugate(&p4s)?.scale(&(&p6s / &det4));
    let a4sp = p4s
        .mul(a2)?
        .mul(&p4s)?
        .scale(&(&p6s / &det4))
        .sub(&p4s)?
        .scale(&(-(&p6s * &p6s) / &det4));
    let two = Scalar::from_integer(2.into());
    let a6p = powi(&p6s, 5) / (&det4 * &det4) * (Scalar::one() - &two / &det4 * &tr_adj_p4a)
        + Scalar::from_integer(3.into()) * powi(&p6s, 4) / (&det4 * &det4) * &tr_p4a
        - Scalar::from_integer(4.into()) * powi(&p6s, 3) / &det4;
    let top_prime = -powi(&p6s, 5) / (&det4 * &det4) * (Scalar::one() - &two / &det4 * &tr_adj_p4a)
        - &two * powi(&p6s, 4) / (&det4 * &det4) * &tr_p4a
        + &two * powi(&p6s, 3) / &det4;
    let p4_star_prime = p4s
        .mul(a2)?
        .mul(&p4s)?
        .scale(&(powi(&p6s, 3) / (&det4 * &det4)));
    let eff = ActionSpec {
        n: 3,
        a0: GrandConstant::ln_of(&p6s),
        a2: a2p,
        a4: Some(star(&a4sp, 1, 3)?),
        a6: Some(one_by_one(a6p)),
        a8: None,
    };
    Ok(ClosedForm {
        eff,
        top_prime,
        p4_star_prime: Some(p4_star_prime),
        p6_star_prime: None,
        det_a2_prime: powi(&p6s, 3) / &det4,
        det_p4_star_prime: Some(powi(&p6s, 9) / powi(&det4, 4) * a2.determinant()?),
    })
}

/// The sextic primed block for four pairs, contracted through the sandwich
/// form with the squared effective propagator in the middle.
pub fn sextic_prime_via_fc(
    a2: &RatMatrix,
    p4: &RatMatrix,
    p4s: &RatMatrix,
    p6s: &RatMatrix,
    p8s: &Scalar,
) -> Result<RatMatrix, ActionError> {
    let det6 = p6s.determinant()?;
    if det6.is_zero() {
        return Err(ActionError::SingularInput("sextic tower level is singular"));
    }
    let c26 = compound(p6s, 2)?;
    let mid = c26.mul(p4)?.mul(&c26)?;
    let lead = p6s.mul(a2)?.mul(p6s)?.scale(&(powi(p8s, 5) / (&det6 * &det6)));
    let sandwich = f_c(&mid, p6s, &mid).scale(&(powi(p8s, 5) / powi(&det6, 4)));
    let cross = p6s
        .mul(&f_a(p6s, p4s))?
        .mul(p6s)?
        .scale(&(Scalar::from_integer(3.into()) * powi(p8s, 4) / (&det6 * &det6)));
    let tail = p6s.scale(&(Scalar::from_integer(4.into()) * powi(p8s, 3) / &det6));
    Ok(lead.add(&sandwich)?.add(&cross)?.sub(&tail)?)
}

/// The same block contracted through the two staggered sandwich forms; kept
/// as a second route so their agreement can be tested.
pub fn sextic_prime_via_fd(
    a2: &RatMatrix,
    p4: &RatMatrix,
    p4s: &RatMatrix,
    p6s: &RatMatrix,
    p8s: &Scalar,
) -> Result<RatMatrix, ActionError> {
    let det6 = p6s.determinant()?;
    if det6.is_zero() {
        return Err(ActionError::SingularInput("sextic tower level is singular"));
    }
    let c26 = compound(p6s, 2)?;
    let c26p4 = c26.mul(p4)?;
    let p4c26 = p4.mul(&c26)?;
    let half_inv = Scalar::new(1.into(), 2.into()) / &det6;
    let inner = a2
        .sub(&f_d1(p4, p6s, &c26p4).scale(&half_inv))?
        .sub(&f_d2(&p4c26, p6s, p4).scale(&half_inv))?;
    let lead = p6s.mul(&inner)?.mul(p6s)?.scale(&(powi(p8s, 5) / (&det6 * &det6)));
    let cross = p6s
        .mul(&f_a(p6s, p4s))?
        .mul(p6s)?
        .scale(&(Scalar::from_integer(3.into()) * powi(p8s, 4) / (&det6 * &det6)));
    let tail = p6s.scale(&(Scalar::from_integer(4.into()) * powi(p8s, 3) / &det6));
    Ok(lead.add(&cross)?.sub(&tail)?)
}

/// The two top-degree scalar groups shared by the octic block and the
/// primed partition scalar for four pairs.
fn octic_lead(
    a2: &RatMatrix,
    p4: &RatMatrix,
    p4s: &RatMatrix,
    p6s: &RatMatrix,
    p8s: &Scalar,
    det6: &Scalar,
) -> Result<Scalar, ActionError> {
    let c26 = compound(p6s, 2)?;
    let c26s = star(&c26, 2, 4)?;
    let c26p4 = c26.mul(p4)?;
    let p4c26 = p4.mul(&c26)?;
    let p6inv = p6s.inverse()?.expect("nonzero determinant");
    let id4 = RatMatrix::identity(4);
    let half = Scalar::new(1.into(), 2.into());
    let group1 = powi(p8s, 7) / (det6 * det6)
        * (Scalar::one()
            - Scalar::from_integer(2.into()) * a2.mul(&f_a(&p6inv, p4))?.trace()?);
    let group2 = powi(p8s, 7) / powi(det6, 4)
        * (p4.mul(&f_g(&c26p4, p6s, p6s, &p4c26))?.trace()?
            - &half * f_c(&c26p4.mul(p4s)?.mul(&c26s)?, &id4, &c26p4).trace()?
            - &half * f_c(&c26s.mul(p4s)?.mul(&p4c26)?, &id4, &p4c26).trace()?);
    Ok(group1 + group2)
}

/// Four-pair map through the sextic tower level, its compound, and the
/// epsilon contraction forms.
pub fn closed_form_n4(spec: &ActionSpec) -> Result<ClosedForm, ActionError> {
    spec.validate()?;
    if spec.n != 4 {
        return Err(ActionError::BadShape(format!("four-pair map got n = {}", spec.n)));
    }
    let a2 = &spec.a2;
    let a4 = spec.a4_ref();
    let a4s = star(a4, 2, 4)?;
    let a6s = star(spec.a6_ref(), 3, 4)?;
    let c2a = compound(a2, 2)?;
    let p4 = c2a.sub(a4)?;
    let p4s = star(&p4, 2, 4)?;
    let p6s = adjugate(a2)?.sub(&f_a(a2, a4))?.sub(&a6s)?;
    let det6 = p6s.determinant()?;
    if det6.is_zero() {
        return Err(ActionError::SingularInput("sextic tower level is singular"));
    }
    let half = Scalar::new(1.into(), 2.into());
    let p8s = a2.determinant()? - a4s.mul(&c2a)?.trace()? + &half * a4s.mul(a4)?.trace()?
        - a6s.mul(a2)?.trace()?
        + spec.a8_ref();
    if p8s.is_zero() {
        return Err(ActionError::SingularInput("partition scalar vanishes"));
    }
    let c26 = compound(&p6s, 2)?;
    let c26s = star(&c26, 2, 4)?;
    let c26p4 = c26.mul(&p4)?;
    let p4c26 = p4.mul(&c26)?;
    let mid = c26p4.mul(&c26)?;
    let a2p = adjugate(&p6s)?.scale(&(&p8s / &det6));
    let a4sp = mid
        .scale(&(&p8s / &det6))
        .sub(&c26)?
        .scale(&(-(&p8s * &p8s) / &det6));
    let a6sp = sextic_prime_via_fc(a2, &p4, &p4s, &p6s, &p8s)?;
    let lead = octic_lead(a2, &p4, &p4s, &p6s, &p8s, &det6)?;
    let tr_p4_p4s = p4.mul(&p4s)?.trace()?;
    let tr_p6_a2 = p6s.mul(a2)?.trace()?;
    let tr_fa_fa = f_a(&RatMatrix::identity(4), &c26p4)
        .mul(&f_a(&RatMatrix::identity(4), &p4s.mul(&c26s)?))?
        .trace()?;
    let tr_p4_c26 = p4c26.trace()?;
    let a8p = &lead
        + powi(&p8s, 6) / (&det6 * &det6)
            * (Scalar::new(11.into(), 2.into()) * &tr_p4_p4s
                + Scalar::from_integer(5.into()) * &tr_p6_a2
                - Scalar::from_integer(5.into()) / &det6 * &tr_fa_fa)
        + Scalar::from_integer(18.into()) * powi(&p8s, 5) / (&det6 * &det6) * &tr_p4_c26
        - Scalar::from_integer(30.into()) * powi(&p8s, 4) / &det6;
    let top_prime = &lead
        + Scalar::from_integer(4.into()) * powi(&p8s, 6) / (&det6 * &det6)
            * (&tr_p4_p4s + &tr_p6_a2 - Scalar::one() / &det6 * &tr_fa_fa)
        + Scalar::from_integer(12.into()) * powi(&p8s, 5) / (&det6 * &det6) * &tr_p4_c26
        - Scalar::from_integer(16.into()) * powi(&p8s, 4) / &det6;
    let p4_star_prime = mid.scale(&(powi(&p8s, 3) / (&det6 * &det6)));
    let p6_star_prime = p6s
        .mul(a2)?
        .mul(&p6s)?
        .scale(&(-powi(&p8s, 5) / (&det6 * &det6)))
        .sub(&f_c(&mid, &p6s, &mid).scale(&(powi(&p8s, 5) / powi(&det6, 4))))?
        .sub(
            &p6s.mul(&f_a(&p6s, &p4s))?
                .mul(&p6s)?
                .scale(&(Scalar::from_integer(2.into()) * powi(&p8s, 4) / (&det6 * &det6))),
        )?
        .add(&p6s.scale(&(Scalar::from_integer(2.into()) * powi(&p8s, 3) / &det6)))?;
    let eff = ActionSpec {
        n: 4,
        a0: GrandConstant::ln_of(&p8s),
        a2: a2p,
        a4: Some(star(&a4sp, 2, 4)?),
        a6: Some(star(&a6sp, 1, 4)?),
        a8: Some(a8p),
    };
    Ok(ClosedForm {
        eff,
        top_prime,
        p4_star_prime: Some(p4_star_prime),
        p6_star_prime: Some(p6_star_prime),
        det_a2_prime: powi(&p8s, 4) / &det6,
        det_p4_star_prime: Some(powi(&p8s, 18) / powi(&det6, 6) * p4s.determinant()?),
    })
}
