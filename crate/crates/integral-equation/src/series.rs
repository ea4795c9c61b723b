//! Truncated rational power series and the functional-equation checks that
//! characterize fixed-point profiles.
//!
//! A profile G records how an action depends on its quadratic bilinear,
//! treated as a formal variable s. The profile of a fixed point must satisfy
//! G(s) = G(-s G'(s)²) + 2 s G'(s); substituting s = t² and b(t) = t G'(t²)
//! turns the nontrivial branch of that condition into the iterative-root
//! equation d(d(t)) = -t for d(t) = i b(t). Everything here stays rational:
//! the imaginary unit only ever enters through an odd series evaluated at an
//! imaginary argument, which is a sign pattern on coefficients.

use std::fmt;

use grassmann_core::scalar::{int, rat, rat_str};
use grassmann_core::Scalar;
use num_traits::Zero;

use crate::IntegralError;

/// A power series kept exactly through a fixed degree. Binary operations
/// truncate to the smaller operand degree, so every stored coefficient is
/// the true coefficient of the underlying series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Scalar>,
}

impl TruncSeries {
    /// A series from its coefficients in ascending degree; the last entry
    /// fixes the truncation degree.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        let coeffs = if coeffs.is_empty() {
            vec![Scalar::zero()]
        } else {
            coeffs
        };
        TruncSeries { coeffs }
    }

    pub fn zero(max_degree: usize) -> Self {
        TruncSeries {
            coeffs: vec![Scalar::zero(); max_degree + 1],
        }
    }

    /// The variable itself, truncated; degree 0 leaves only the zero series.
    pub fn variable(max_degree: usize) -> Self {
        let mut s = Self::zero(max_degree);
        if max_degree >= 1 {
            s.coeffs[1] = int(1);
        }
        s
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// The same series re-truncated: shortening drops coefficients,
    /// lengthening declares the missing ones zero.
    pub fn resized(&self, max_degree: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(max_degree + 1, Scalar::zero());
        TruncSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let deg = self.max_degree().min(other.max_degree());
        TruncSeries::new(
            (0..=deg)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, by: &Scalar) -> Self {
        TruncSeries::new(self.coeffs.iter().map(|c| c * by).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let deg = self.max_degree().min(other.max_degree());
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(deg + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(deg + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncSeries::new(coeffs)
    }

    /// Multiplication by the variable. The truncation degree grows by one;
    /// every new coefficient is still exact.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Scalar::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        TruncSeries { coeffs }
    }

    /// Composition self(inner); the inner series must have no constant term
    /// so that truncation is well defined.
    pub fn compose(&self, inner: &Self) -> Self {
        assert!(
            inner.coeffs[0].is_zero(),
            "composition needs a vanishing inner constant term"
        );
        let deg = self.max_degree().min(inner.max_degree());
        let mut acc = TruncSeries::zero(deg);
        acc.coeffs[0] = self.coeffs[0].clone();
        let mut power = TruncSeries::zero(deg);
        power.coeffs[0] = int(1);
        let inner_cut = inner.resized(deg);
        for k in 1..=deg {
            power = power.mul(&inner_cut);
            acc = acc.add(&power.scale(&self.coeffs[k]));
        }
        acc
    }

    /// Termwise derivative; the truncation degree drops by one.
    pub fn derivative(&self) -> Self {
        if self.max_degree() == 0 {
            return TruncSeries::zero(0);
        }
        TruncSeries::new(
            (1..=self.max_degree())
                .map(|k| int(k as i64) * &self.coeffs[k])
                .collect(),
        )
    }

    /// For an odd series b, the series b(it)/i: the two imaginary units per
    /// squared degree fold into a sign, flipping every coefficient whose
    /// degree is 3 mod 4. Applying it twice restores the original.
    pub fn imaginary_argument_twist(&self) -> Self {
        TruncSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 4 == 3 { -c } else { c.clone() })
                .collect(),
        )
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{}", rat_str(c))?,
                1 => write!(f, "{}*t", rat_str(c))?,
                _ => write!(f, "{}*t^{}", rat_str(c), k)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The odd series b(t) = t G'(t²) of a profile G, through degree max_deg.
pub fn iterative_root_series(
    g: &TruncSeries,
    max_deg: usize,
) -> Result<TruncSeries, IntegralError> {
    let need = (max_deg + 1) / 2;
    if g.max_degree() < need {
        return Err(IntegralError::InsufficientDegree);
    }
    let mut coeffs = vec![Scalar::zero(); max_deg + 1];
    let mut k = 1usize;
    while 2 * k - 1 <= max_deg {
        coeffs[2 * k - 1] = int(k as i64) * g.coeff(k);
        k += 1;
    }
    Ok(TruncSeries::new(coeffs))
}

/// Whether d(d(t)) = -t holds through degree max_deg for d(t) = i b(t) with
/// b(t) = t G'(t²). With b odd, the condition is equivalent to the twisted
/// series of b composed with b giving the plain variable, all rational.
pub fn series_iterative_root_check(
    g: &TruncSeries,
    max_deg: usize,
) -> Result<bool, IntegralError> {
    let b = iterative_root_series(g, max_deg)?;
    let composed = b.imaginary_argument_twist().compose(&b);
    Ok(composed == TruncSeries::variable(max_deg))
}

/// Whether b(b(t)) = t holds through degree max_deg, the involution variant
/// appropriate when G' is even.
pub fn series_babbage_check(g: &TruncSeries, max_deg: usize) -> Result<bool, IntegralError> {
    let b = iterative_root_series(g, max_deg)?;
    Ok(b.compose(&b) == TruncSeries::variable(max_deg))
}

/// Whether G(s) = G(-s G'(s)²) + 2 s G'(s) holds through degree max_deg, the
/// profile form of the statement that the map fixes the action.
pub fn series_legendre_identity_check(
    g: &TruncSeries,
    max_deg: usize,
) -> Result<bool, IntegralError> {
    if g.max_degree() < max_deg {
        return Err(IntegralError::InsufficientDegree);
    }
    let gt = g.resized(max_deg);
    let gp = gt.derivative();
    let inner = gp.mul(&gp).shift_up().neg();
    let rhs = gt.compose(&inner).add(&gp.scale(&int(2)).shift_up());
    Ok(gt == rhs)
}

/// The purely quadratic fixed-point profile G(s) = s.
pub fn fixed_point_profile_gaussian(max_degree: usize) -> TruncSeries {
    TruncSeries::variable(max_degree)
}

/// The non-quadratic four-pair fixed-point profile
/// G(s) = s - s²/2 + s³/2 - (3/8) s⁴.
pub fn fixed_point_profile_nongaussian(max_degree: usize) -> TruncSeries {
    TruncSeries::new(vec![int(0), int(1), rat(-1, 2), rat(1, 2), rat(-3, 8)]).resized(max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(vals: &[(i64, i64)]) -> TruncSeries {
        TruncSeries::new(vals.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn products_truncate_to_the_smaller_degree() {
        let a = s(&[(1, 1), (1, 1)]);
        let b = s(&[(1, 1), (1, 1), (0, 1)]);
        let prod = a.mul(&b);
        assert_eq!(prod, s(&[(1, 1), (2, 1)]));
        assert_eq!(prod.max_degree(), 1);
    }

    #[test]
    fn shifting_keeps_the_top_coefficient() {
        let a = s(&[(1, 1), (3, 1)]);
        assert_eq!(a.shift_up(), s(&[(0, 1), (1, 1), (3, 1)]));
    }

    #[test]
    fn composition_collects_inner_powers() {
        let f = s(&[(0, 1), (1, 1), (1, 1)]);
        let g = s(&[(0, 1), (2, 1), (0, 1)]);
        assert_eq!(f.compose(&g), s(&[(0, 1), (2, 1), (4, 1)]));
    }

    #[test]
    #[should_panic(expected = "vanishing inner constant")]
    fn composition_rejects_inner_constants() {
        let f = s(&[(0, 1), (1, 1)]);
        let g = s(&[(1, 1), (1, 1)]);
        let _ = f.compose(&g);
    }

    #[test]
    fn derivative_drops_one_degree() {
        let f = s(&[(5, 1), (1, 1), (0, 1), (7, 3)]);
        assert_eq!(f.derivative(), s(&[(1, 1), (0, 1), (7, 1)]));
    }

    #[test]
    fn twist_is_an_involution_and_flips_degree_three() {
        let b = s(&[(0, 1), (1, 1), (0, 1), (5, 2), (0, 1), (4, 1)]);
        let t = b.imaginary_argument_twist();
        assert_eq!(t.coeff(1), int(1));
        assert_eq!(t.coeff(3), rat(-5, 2));
        assert_eq!(t.coeff(5), int(4));
        assert_eq!(t.imaginary_argument_twist(), b);
    }

    #[test]
    fn display_is_readable() {
        let b = s(&[(0, 1), (1, 1), (0, 1), (-3, 2)]);
        assert_eq!(b.to_string(), "1*t + -3/2*t^3");
        assert_eq!(TruncSeries::zero(2).to_string(), "0");
    }
}
