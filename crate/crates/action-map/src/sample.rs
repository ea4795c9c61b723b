//! Seeded random actions with the degeneracies rejected.
//!
//! Entries are small rationals so exact arithmetic stays fast. A draw is
//! retried until the determinants and partition scalars the maps divide by
//! are nonzero, so every returned spec is safe for both routes. Five-pair
//! draws only reject a singular quadratic block; their tower levels are not
//! reachable without integration, so callers check the rest themselves.

use grassmann_core::{rng::DetRng, GrandConstant};
use matrix_kit::{binomial, RatMatrix};
use num_traits::Zero;

use crate::closed::block_tower;
use crate::spec::ActionSpec;

fn random_matrix(rng: &mut DetRng, dim: usize) -> RatMatrix {
    RatMatrix::from_fn(dim, dim, |_, _| rng.small_rat())
}

/// A random action over n pairs whose required determinants and partition
/// scalars are nonzero.
pub fn random_spec(n: u8, rng: &mut DetRng) -> ActionSpec {
    assert!((1..=5).contains(&n), "pair count {n} outside 1..=5");
    loop {
        let spec = ActionSpec {
            n,
            a0: GrandConstant::from_rational(rng.small_rat()),
            a2: random_matrix(rng, n as usize),
            a4: (n >= 2).then(|| random_matrix(rng, binomial(n as usize, 2))),
            a6: (n >= 3).then(|| random_matrix(rng, binomial(n as usize, 3))),
            a8: (n == 4).then(|| rng.small_rat()),
        };
        if usable(&spec) {
            return spec;
        }
    }
}

fn usable(spec: &ActionSpec) -> bool {
    let det_a2 = match spec.a2.determinant() {
        Ok(d) => d,
        Err(_) => return false,
    };
    if det_a2.is_zero() {
        return false;
    }
    if spec.n == 5 {
        return true;
    }
    let tower = match block_tower(spec) {
        Ok(t) => t,
        Err(_) => return false,
    };
    if tower.top().is_zero() {
        return false;
    }
    tower.levels[1..spec.n as usize]
        .iter()
        .all(|level| level.determinant().map(|d| !d.is_zero()).unwrap_or(false))
}

/// A random invertible matrix, for identity suites that need one.
pub fn random_invertible(dim: usize, rng: &mut DetRng) -> RatMatrix {
    loop {
        let m = random_matrix(rng, dim);
        if let Ok(d) = m.determinant() {
            if !d.is_zero() {
                return m;
            }
        }
    }
}
