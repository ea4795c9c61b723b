//! Quadratic and quartic output blocks for any pair count.
//!
//! The patterns visible at two, three, and four pairs extend to a single
//! pair of formulas in the tower levels: the primed quadratic block is the
//! full partition scalar times the inverse of the first level, and the
//! primed quartic block is a sandwich of the second level between starred
//! compounds of the first. For five pairs and up this is an extrapolation,
//! not a derived result; the brute-force route stays the ground truth there.

use matrix_kit::{adjugate, compound, star, RatMatrix};
use num_traits::Zero;

use crate::brute::partition_tower;
use crate::spec::ActionSpec;
use crate::ActionError;

/// The primed quadratic and quartic blocks from the partition tower alone.
pub fn general_quadratic_quartic(
    spec: &ActionSpec,
) -> Result<(RatMatrix, RatMatrix), ActionError> {
    spec.validate()?;
    let n = spec.n;
    if n < 2 {
        return Err(ActionError::BadShape("quartic block needs at least 2 pairs".into()));
    }
    let tower = partition_tower(spec)?;
    let top = tower.top().clone();
    let lv1 = &tower.levels[1];
    let lv2 = &tower.levels[2];
    let det1 = lv1.determinant()?;
    if det1.is_zero() {
        return Err(ActionError::SingularInput("first tower level is singular"));
    }
    let a2p = adjugate(lv1)?.scale(&(&top / &det1));
    let mid = star(&compound(lv1, n - 2)?, n - 2, n)?;
    let a4p = mid
        .mul(lv2)?
        .mul(&mid)?
        .scale(&(&top / &det1))
        .sub(&mid)?
        .scale(&(-(&top * &top) / &det1));
    Ok((a2p, a4p))
}
