//! Formal constants: a rational plus rational multiples of logarithms.
//!
//! Log arguments are canonicalized to a signed prime factor basis, so two
//! constants built along different routes compare equal exactly whenever they
//! are equal as numbers. `ln(-1)` is kept as a formal token; nothing here is
//! ever evaluated in floating point except the display helper.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{rat_str, Scalar};

const TRIAL_LIMIT: u64 = 1_000_000;

/// A value `rational + Σ coeff · ln(base)` with integer bases that are either
/// -1 or pairwise distinct primes (an unfactored cofactor may appear as its
/// own base when trial division gives up).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GrandConstant {
    rational: Scalar,
    logs: BTreeMap<BigInt, Scalar>,
}

impl GrandConstant {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rational(r: Scalar) -> Self {
        GrandConstant {
            rational: r,
            logs: BTreeMap::new(),
        }
    }

    /// The formal logarithm of a nonzero rational. Panics on zero.
    pub fn ln_of(arg: &Scalar) -> Self {
        assert!(!arg.is_zero(), "logarithm of zero");
        let mut logs = BTreeMap::new();
        let one = Scalar::one();
        if arg.is_negative() {
            accumulate(&mut logs, BigInt::from(-1), &one);
        }
        factor_into(&mut logs, arg.numer().abs(), &one);
        factor_into(&mut logs, arg.denom().clone(), &(-one));
        prune(&mut logs);
        GrandConstant {
            rational: Scalar::zero(),
            logs,
        }
    }

    /// `coeff · ln(arg)`.
    pub fn ln_scaled(arg: &Scalar, coeff: &Scalar) -> Self {
        Self::ln_of(arg).scaled(coeff)
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.logs.is_empty()
    }

    pub fn is_rational_only(&self) -> bool {
        self.logs.is_empty()
    }

    pub fn rational_part(&self) -> &Scalar {
        &self.rational
    }

    /// Canonical log terms as (base, coefficient) pairs, bases ascending.
    pub fn log_terms(&self) -> impl Iterator<Item = (&BigInt, &Scalar)> {
        self.logs.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut logs = self.logs.clone();
        for (b, c) in &other.logs {
            accumulate(&mut logs, b.clone(), c);
        }
        prune(&mut logs);
        GrandConstant {
            rational: &self.rational + &other.rational,
            logs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GrandConstant {
            rational: -self.rational.clone(),
            logs: self.logs.iter().map(|(b, c)| (b.clone(), -c)).collect(),
        }
    }

    pub fn scaled(&self, by: &Scalar) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        GrandConstant {
            rational: &self.rational * by,
            logs: self.logs.iter().map(|(b, c)| (b.clone(), c * by)).collect(),
        }
    }

    /// Product with another constant; defined only when at least one side is
    /// rational-only (formal logs cannot be multiplied together).
    pub fn mul(&self, other: &Self) -> Self {
        if other.is_rational_only() {
            self.scaled(&other.rational)
        } else if self.is_rational_only() {
            other.scaled(&self.rational)
        } else {
            panic!("product of two formal log constants is not representable");
        }
    }

    /// Display-only numeric value.
    pub fn to_f64(&self) -> f64 {
        let mut v = self.rational.to_f64().unwrap_or(f64::NAN);
        for (b, c) in &self.logs {
            let bf = b.to_f64().unwrap_or(f64::NAN);
            v += c.to_f64().unwrap_or(f64::NAN) * bf.ln();
        }
        v
    }
}

impl fmt::Display for GrandConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.rational.is_zero() || self.logs.is_empty() {
            write!(f, "{}", rat_str(&self.rational))?;
            first = false;
        }
        for (b, c) in &self.logs {
            if first {
                write!(f, "{}*ln({})", rat_str(c), b)?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}*ln({})", rat_str(&-c), b)?;
            } else {
                write!(f, " + {}*ln({})", rat_str(c), b)?;
            }
        }
        Ok(())
    }
}

fn accumulate(logs: &mut BTreeMap<BigInt, Scalar>, base: BigInt, coeff: &Scalar) {
    if coeff.is_zero() {
        return;
    }
    let entry = logs.entry(base).or_insert_with(Scalar::zero);
    *entry += coeff;
}

fn prune(logs: &mut BTreeMap<BigInt, Scalar>) {
    logs.retain(|_, c| !c.is_zero());
}

/// Splits `n` (positive) into prime factors below the trial bound, peeling
/// perfect powers off any remaining cofactor; a final unfactored cofactor is
/// kept as a base of its own.
fn factor_into(logs: &mut BTreeMap<BigInt, Scalar>, n: BigInt, coeff: &Scalar) {
    assert!(n.is_positive(), "factoring a non-positive integer");
    let mut rest = n;
    if rest.is_one() {
        return;
    }
    let two = BigInt::from(2);
    let mut p = two.clone();
    while &p * &p <= rest {
        if p.to_u64().map(|v| v > TRIAL_LIMIT).unwrap_or(true) {
            break;
        }
        let mut mult = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            mult += 1;
        }
        if mult > 0 {
            accumulate(logs, p.clone(), &(coeff * Scalar::from_integer(BigInt::from(mult))));
        }
        p = if p == two { BigInt::from(3) } else { p + &two };
    }
    if rest.is_one() {
        return;
    }
    for k in (2..=64u32).rev() {
        let root = rest.nth_root(k);
        if num_traits::Pow::pow(&root, k) == rest && root > BigInt::one() {
            factor_into(logs, root, &(coeff * Scalar::from_integer(BigInt::from(k))));
            return;
        }
    }
    accumulate(logs, rest, coeff);
}
