//! Eigen-action and sourced-transform checks for four generator pairs.
//!
//! The sourced Berezin transform sends exp G0 in the integration variables
//! to an element in the source variables. A fixed-point action whose
//! quadratic block squares to minus the identity is an eigenelement of that
//! transform; and for any invertible quadratic matrix, actions built from a
//! fixed-point profile of the quadratic bilinear transform into the same
//! profile of the dual bilinear, times the determinant.

use action_map::{decode_action, encode_action_on, partition_element, ActionSpec};
use grassmann_core::{AlgebraLayout, Element, Sector};
use matrix_kit::RatMatrix;
use num_traits::Zero;

use crate::series::{
    fixed_point_profile_gaussian, fixed_point_profile_nongaussian, TruncSeries,
};
use crate::IntegralError;

/// The profile evaluated on an algebra element: the sum of profile
/// coefficients times powers of x. The profile must start at degree one so
/// no formal constant enters.
pub fn apply_profile(profile: &TruncSeries, x: &Element) -> Result<Element, IntegralError> {
    if !profile.coeff(0).is_zero() {
        return Err(IntegralError::PreconditionViolated(
            "profiles must start at degree one".into(),
        ));
    }
    let mut acc = Element::zero(x.layout());
    let mut power = Element::one(x.layout());
    for k in 1..=profile.max_degree() {
        power = power.mul(x)?;
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power.scale(&profile.coeff(k)))?;
    }
    Ok(acc)
}

/// The bilinear sum of b entries over a conjugate sector pair.
fn pair_bilinear(
    layout: &AlgebraLayout,
    b: &RatMatrix,
    bar: Sector,
    un: Sector,
) -> Result<Element, IntegralError> {
    let n = layout.n();
    let mut acc = Element::zero(layout);
    for l in 1..=n {
        for m in 1..=n {
            let c = b.get((l - 1) as usize, (m - 1) as usize);
            if c.is_zero() {
                continue;
            }
            let term = Element::generator(layout, bar, l)?
                .mul(&Element::generator(layout, un, m)?)?
                .scale(c);
            acc = acc.add(&term)?;
        }
    }
    Ok(acc)
}

/// Whether exp G0 is a fixed element of the sourced Berezin transform:
/// integrating it against the standard sources reproduces exp G0 in the
/// source variables. Posed for four pairs with a quadratic block squaring
/// to minus the identity, which also forces its determinant to one.
pub fn self_reciprocal_check(spec: &ActionSpec) -> Result<bool, IntegralError> {
    if spec.n != 4 {
        return Err(IntegralError::PreconditionViolated(
            "the eigen-action check is posed for four pairs".into(),
        ));
    }
    let square = spec.a2.mul(&spec.a2)?;
    if square != RatMatrix::identity(4).neg() {
        return Err(IntegralError::PreconditionViolated(
            "quadratic block must square to minus the identity".into(),
        ));
    }
    let lhs = partition_element(spec)?;
    let layout = AlgebraLayout::transform(4);
    let rhs = encode_action_on(spec, &layout, Sector::EtaBar, Sector::Eta)?
        .without_constant()
        .exp_nilpotent()?;
    Ok(lhs == rhs)
}

fn source_transform_check(
    b: &RatMatrix,
    profile: &TruncSeries,
) -> Result<bool, IntegralError> {
    if !b.is_square() || b.rows() != 4 {
        return Err(IntegralError::PreconditionViolated(
            "source transform checks need a 4 x 4 matrix".into(),
        ));
    }
    let inv = b.inverse()?.ok_or_else(|| {
        IntegralError::PreconditionViolated("source transform checks need an invertible matrix".into())
    })?;
    let det = b.determinant()?;
    let action_layout = AlgebraLayout::action(4);
    let gq = pair_bilinear(&action_layout, b, Sector::PsiBar, Sector::Psi)?;
    let spec = decode_action(&apply_profile(profile, &gq)?)?;
    let lhs = partition_element(&spec)?;
    let transform_layout = AlgebraLayout::transform(4);
    let wq = pair_bilinear(&transform_layout, &inv.neg(), Sector::EtaBar, Sector::Eta)?;
    let rhs = apply_profile(profile, &wq)?.exp_nilpotent()?.scale(&det);
    Ok(lhs == rhs)
}

/// Whether the sourced transform of exp of the non-quadratic fixed-point
/// profile of the bilinear of b equals det b times exp of the same profile
/// of the dual bilinear of minus the inverse of b.
pub fn quartic_source_transform_check(b: &RatMatrix) -> Result<bool, IntegralError> {
    source_transform_check(b, &fixed_point_profile_nongaussian(4))
}

/// The purely quadratic analogue of the same transform statement.
pub fn gaussian_source_transform_check(b: &RatMatrix) -> Result<bool, IntegralError> {
    source_transform_check(b, &fixed_point_profile_gaussian(4))
}
