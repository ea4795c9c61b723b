//! Dropping the last generator pair from a separable action.
//!
//! When the last pair enters only through a unit quadratic diagonal entry,
//! the action splits as a sum and the pair integrates out to a factor of
//! one, so the map commutes with forgetting that pair. The precondition is
//! checked entry by entry: the quadratic block must be block-diagonal with
//! a unit last entry, and every higher block entry whose row or column
//! subset touches the last index must vanish.

use grassmann_core::Scalar;
use matrix_kit::{binomial, k_subsets, subset_position, RatMatrix};
use num_traits::{One, Zero};

use crate::spec::ActionSpec;
use crate::ActionError;

/// The action over the first n-1 pairs, after checking separability in the
/// last pair.
pub fn reduce_dimension(spec: &ActionSpec) -> Result<ActionSpec, ActionError> {
    spec.validate()?;
    let n = spec.n;
    if n == 1 {
        return Err(ActionError::PreconditionViolated(
            "a single-pair action has no pair to drop".into(),
        ));
    }
    let last = n as usize - 1;
    if !(spec.a2.get(last, last) - Scalar::one()).is_zero() {
        return Err(ActionError::PreconditionViolated(format!(
            "quadratic entry at ({n}, {n}) must be 1"
        )));
    }
    for i in 0..last {
        if !spec.a2.get(i, last).is_zero() || !spec.a2.get(last, i).is_zero() {
            return Err(ActionError::PreconditionViolated(format!(
                "quadratic block couples pair {n} to pair {}",
                i + 1
            )));
        }
    }
    let touches_last = |subset: &[u8]| subset.contains(&n);
    let check_block = |block: &RatMatrix, k: u8, label: &str| -> Result<(), ActionError> {
        let subsets = k_subsets(n, k);
        for (i, left) in subsets.iter().enumerate() {
            for (j, right) in subsets.iter().enumerate() {
                if (touches_last(left) || touches_last(right)) && !block.get(i, j).is_zero() {
                    return Err(ActionError::PreconditionViolated(format!(
                        "{label} entry at {left:?}, {right:?} touches pair {n} but is nonzero"
                    )));
                }
            }
        }
        Ok(())
    };
    if let Some(a4) = &spec.a4 {
        check_block(a4, 2, "quartic")?;
    }
    if let Some(a6) = &spec.a6 {
        check_block(a6, 3, "sextic")?;
    }
    if let Some(a8) = &spec.a8 {
        if !a8.is_zero() {
            return Err(ActionError::PreconditionViolated(
                "octic entry touches every pair but is nonzero".into(),
            ));
        }
    }
    let m = n - 1;
    let a2r = RatMatrix::from_fn(m as usize, m as usize, |i, j| spec.a2.get(i, j).clone());
    let shrink = |block: &RatMatrix, k: u8| -> RatMatrix {
        let dim = binomial(m as usize, k as usize);
        let subsets = k_subsets(n, k);
        let mut out = RatMatrix::zeros(dim, dim);
        for (i, left) in subsets.iter().enumerate() {
            if touches_last(left) {
                continue;
            }
            for (j, right) in subsets.iter().enumerate() {
                if touches_last(right) {
                    continue;
                }
                out.set(
                    subset_position(m, left),
                    subset_position(m, right),
                    block.get(i, j).clone(),
                );
            }
        }
        out
    };
    let reduced = ActionSpec {
        n: m,
        a0: spec.a0.clone(),
        a2: a2r,
        a4: (m >= 2).then(|| shrink(spec.a4_ref(), 2)),
        a6: (m >= 3).then(|| shrink(spec.a6_ref(), 3)),
        a8: (m == 4).then(Scalar::zero),
    };
    reduced.validate()?;
    Ok(reduced)
}
