//! Coefficient containers for actions over n conjugate generator pairs.

use grassmann_core::{GrandConstant, Scalar};
use matrix_kit::{binomial, star, RatMatrix};
use num_traits::Zero;

use crate::ActionError;

/// Coefficient blocks of an even action over n generator pairs. The degree-2k
/// block is indexed by the ordered k-subsets of 1..=n on each side, so it is
/// a C(n,k) x C(n,k) rational matrix; blocks beyond the generator count are
/// absent. The constant block a0 may carry formal logarithms.
///
/// For n = 5 only the constant, quadratic, quartic, and sextic blocks are
/// representable; the octic and decic blocks are taken to vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionSpec {
    pub n: u8,
    pub a0: GrandConstant,
    pub a2: RatMatrix,
    pub a4: Option<RatMatrix>,
    pub a6: Option<RatMatrix>,
    pub a8: Option<Scalar>,
}

/// The image of an action under the map: same block layout, with a0 holding
/// the logarithm of the full partition scalar as a formal constant.
pub type EffectiveAction = ActionSpec;

impl ActionSpec {
    /// A purely quadratic action with zero constant.
    pub fn gaussian(a2: RatMatrix) -> Result<Self, ActionError> {
        let n = a2.rows();
        if !a2.is_square() || n == 0 || n > 5 {
            return Err(ActionError::BadShape(format!(
                "quadratic block is {}x{}, want n x n with 1 <= n <= 5",
                a2.rows(),
                a2.cols()
            )));
        }
        let n = n as u8;
        let spec = ActionSpec {
            n,
            a0: GrandConstant::zero(),
            a2,
            a4: if n >= 2 {
                Some(RatMatrix::zeros(binomial(n as usize, 2), binomial(n as usize, 2)))
            } else {
                None
            },
            a6: if n >= 3 {
                Some(RatMatrix::zeros(binomial(n as usize, 3), binomial(n as usize, 3)))
            } else {
                None
            },
            a8: if n == 4 { Some(Scalar::zero()) } else { None },
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks that every block is present exactly when the generator count
    /// calls for it and has the subset-indexed dimensions.
    pub fn validate(&self) -> Result<(), ActionError> {
        let n = self.n as usize;
        if self.n == 0 || self.n > 5 {
            return Err(ActionError::BadShape(format!(
                "generator pair count {} outside 1..=5",
                self.n
            )));
        }
        if self.a2.rows() != n || self.a2.cols() != n {
            return Err(ActionError::BadShape(format!(
                "quadratic block is {}x{}, want {}x{}",
                self.a2.rows(),
                self.a2.cols(),
                n,
                n
            )));
        }
        let check_block = |block: &Option<RatMatrix>, k: usize, label: &str| {
            let want = if self.n as usize >= k { Some(binomial(n, k)) } else { None };
            match (block, want) {
                (None, None) => Ok(()),
                (Some(_), None) => Err(ActionError::BadShape(format!(
                    "{label} block present but n = {n} has no degree-{} terms",
                    2 * k
                ))),
                (None, Some(_)) => Err(ActionError::BadShape(format!(
                    "{label} block missing for n = {n}"
                ))),
                (Some(m), Some(dim)) => {
                    if m.rows() == dim && m.cols() == dim {
                        Ok(())
                    } else {
                        Err(ActionError::BadShape(format!(
                            "{label} block is {}x{}, want {}x{}",
                            m.rows(),
                            m.cols(),
                            dim,
                            dim
                        )))
                    }
                }
            }
        };
        check_block(&self.a4, 2, "quartic")?;
        check_block(&self.a6, 3, "sextic")?;
        match (&self.a8, self.n) {
            (Some(_), 4) | (None, 1..=3) | (None, 5) => Ok(()),
            (Some(_), _) => Err(ActionError::BadShape(
                "octic entry present but only n = 4 stores one".into(),
            )),
            (None, _) => Err(ActionError::BadShape("octic entry missing for n = 4".into())),
        }
    }

    /// The quartic block, or the empty reference shape for n = 1.
    pub fn a4_ref(&self) -> &RatMatrix {
        self.a4.as_ref().expect("quartic block present")
    }

    /// The sextic block.
    pub fn a6_ref(&self) -> &RatMatrix {
        self.a6.as_ref().expect("sextic block present")
    }

    /// The octic entry for n = 4.
    pub fn a8_ref(&self) -> &Scalar {
        self.a8.as_ref().expect("octic entry present")
    }

    /// True when every block above the quadratic one vanishes.
    pub fn is_gaussian(&self) -> bool {
        self.a4.as_ref().map_or(true, |m| m.max_abs().is_zero())
            && self.a6.as_ref().map_or(true, |m| m.max_abs().is_zero())
            && self.a8.as_ref().map_or(true, |s| s.is_zero())
    }
}

/// Partition scalars of all subsystems, arranged by omitted pair count.
/// Level k is the C(n,k) x C(n,k) matrix whose (L, M) entry is, up to the
/// extraction sign, the partition scalar of the system with the source rows
/// L and columns M removed; level 0 is the 1 x 1 full partition scalar and
/// level n is the 1 x 1 unit.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionTower {
    pub n: u8,
    pub levels: Vec<RatMatrix>,
}

impl PartitionTower {
    /// The full partition scalar.
    pub fn top(&self) -> &Scalar {
        self.levels[0].get(0, 0)
    }

    /// Level k carried back through the star duality, indexed by the omitted
    /// k-subsets themselves rather than their complements.
    pub fn unstarred(&self, k: u8) -> Result<RatMatrix, ActionError> {
        Ok(star(&self.levels[k as usize], k, self.n)?)
    }
}
