//! Solution families of the rescaling equation, by generator pair count.

use action_map::{effective_action_bruteforce, ActionSpec};
use grassmann_core::scalar::{int, rat_str};
use grassmann_core::{GrandConstant, Scalar};
use matrix_kit::{adjugate, compound, star, RatMatrix};
use num_traits::Zero;

use crate::{rescale_residual, IntegralError, Mu};

/// What the solver found: a member of the solution family together with its
/// additive shift, a reasoned statement that no member exists at this scale,
/// or the statement that only purely quadratic actions qualify.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    Solution {
        spec: ActionSpec,
        delta_f: GrandConstant,
    },
    NoSolution {
        reason: String,
    },
    GaussianOnly,
}

/// Two-pair family: any invertible quadratic block extends to a solution at
/// any positive squared scale. The quartic entry is (1 - mu) det a2, the
/// constant is ln det a2 - ln mu, and the shift is 2 ln mu.
pub fn solve_n2(a2: &RatMatrix, mu: &Mu) -> Result<SolveOutcome, IntegralError> {
    if !a2.is_square() || a2.rows() != 2 {
        return Err(IntegralError::PreconditionViolated(
            "two-pair solver needs a 2 x 2 quadratic block".into(),
        ));
    }
    let det = a2.determinant()?;
    if det.is_zero() {
        return Err(IntegralError::SingularA2);
    }
    let m = mu.value();
    let quartic = (int(1) - m) * &det;
    let mut a4 = RatMatrix::zeros(1, 1);
    a4.set(0, 0, quartic);
    let spec = ActionSpec {
        n: 2,
        a0: GrandConstant::ln_of(&det).sub(&GrandConstant::ln_of(m)),
        a2: a2.clone(),
        a4: Some(a4),
        a6: None,
        a8: None,
    };
    Ok(SolveOutcome::Solution {
        spec,
        delta_f: GrandConstant::ln_scaled(m, &int(2)),
    })
}

/// Three-pair family: only the unit scale admits solutions, and those are
/// purely quadratic. For any other scale both sign branches of the final
/// consistency cube are reported as nonzero.
pub fn solve_n3(mu: &Mu) -> SolveOutcome {
    if mu.is_one() {
        return SolveOutcome::GaussianOnly;
    }
    let m = mu.value();
    let c1 = m + int(3);
    let c0 = int(3) * m + int(1);
    let shifted = m - int(1);
    let cube = &shifted * &shifted * &shifted;
    SolveOutcome::NoSolution {
        reason: format!(
            "consistency (λ∓1)³ ≠ 0: with λ² = {}, the upper branch reduces to \
             ({})·λ − ({}), which has no root with λ² = {} because (λ²−1)³ = {} ≠ 0, \
             and the lower branch reduces to ({})·λ + ({}), positive for every λ > 0",
            rat_str(m),
            rat_str(&c1),
            rat_str(&c0),
            rat_str(m),
            rat_str(&cube),
            rat_str(&c1),
            rat_str(&c0),
        ),
    }
}

/// The squared scale forced by the four-pair quartic weight kappa.
pub fn derived_scale_square(kappa: &Scalar) -> Scalar {
    int(3) * kappa * (kappa - int(1)) + int(1)
}

/// First closure condition of the four-pair family; zero exactly when mu is
/// the derived squared scale for kappa.
pub fn primary_consistency_residual(kappa: &Scalar, mu: &Scalar) -> Scalar {
    mu - &derived_scale_square(kappa)
}

/// Second closure condition of the four-pair family. It factors as
/// (2 - 3 kappa) times the first, so it adds no constraint once mu is
/// derived from kappa.
pub fn secondary_consistency_residual(kappa: &Scalar, mu: &Scalar) -> Scalar {
    let k2 = kappa * kappa;
    let k3 = &k2 * kappa;
    int(2) * mu - int(3) * mu * kappa + int(9) * &k3 - int(15) * &k2 + int(9) * kappa - int(2)
}

/// Four-pair family under the compound Ansatz: the quartic block is a
/// multiple of the pair compound of a2, with weight kappa. The squared scale
/// is derived from kappa, the sextic block is a matching multiple of the
/// adjugate carried through the star pairing, and the octic entry is a
/// polynomial in kappa and mu times det a2. Weight 1 is the purely quadratic
/// member; weight 0 is the non-quadratic member at unit scale.
pub fn solve_n4(a2: &RatMatrix, kappa: &Scalar) -> Result<SolveOutcome, IntegralError> {
    if !a2.is_square() || a2.rows() != 4 {
        return Err(IntegralError::PreconditionViolated(
            "four-pair solver needs a 4 x 4 quadratic block".into(),
        ));
    }
    let det = a2.determinant()?;
    if det.is_zero() {
        return Err(IntegralError::SingularA2);
    }
    let mu_val = derived_scale_square(kappa);
    let mu = Mu::new(mu_val)?;
    let m = mu.value();
    assert!(
        secondary_consistency_residual(kappa, m).is_zero(),
        "secondary closure must follow once the squared scale is derived"
    );

    let a4 = compound(a2, 2)?.scale(&(int(1) - kappa));
    let k2 = kappa * kappa;
    let sextic_weight = m - int(6) * &k2 + int(9) * kappa - int(4);
    let a6 = star(&adjugate(a2)?.scale(&sextic_weight), 1, 4)?;
    let k3 = &k2 * kappa;
    let octic_weight = m * m + int(20) * m - int(24) * m * kappa + int(72) * &k3
        - int(147) * &k2
        + int(108) * kappa
        - int(30);
    let spec = ActionSpec {
        n: 4,
        a0: GrandConstant::ln_of(&det).sub(&GrandConstant::ln_scaled(m, &int(2))),
        a2: a2.clone(),
        a4: Some(a4),
        a6: Some(a6),
        a8: Some(octic_weight * &det),
    };
    Ok(SolveOutcome::Solution {
        spec,
        delta_f: GrandConstant::ln_scaled(m, &int(4)),
    })
}

/// Runs the brute-force action map on `spec` and reports whether every block
/// above the constant satisfies the rescaling equation at `mu` exactly.
pub fn verify_fixed_point(spec: &ActionSpec, mu: &Mu) -> Result<bool, IntegralError> {
    let eff = effective_action_bruteforce(spec)?;
    Ok(rescale_residual(spec, &eff, mu)?.is_zero_blocks())
}
