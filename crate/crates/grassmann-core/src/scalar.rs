//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (guaranteed by the representation).
pub type Scalar = BigRational;

/// Builds p/q. Panics if q = 0.
pub fn rat(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Builds the integer scalar p.
pub fn int(p: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(p))
}

/// Renders a scalar as `p` for integers and `p/q` otherwise.
pub fn rat_str(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` with optional leading sign. Returns None on malformed
/// input or a zero denominator.
pub fn parse_rat(s: &str) -> Option<Scalar> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_str.parse().ok()?;
    let den: BigInt = den_str.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// True if x is a square of a rational; returns the positive square root.
pub fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let pn = x.numer().sqrt();
    let pd = x.denom().sqrt();
    if &(&pn * &pn) == x.numer() && &(&pd * &pd) == x.denom() {
        Some(BigRational::new(pn, pd))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["0", "5", "-3", "1/2", "-7/3", "22/7"] {
            let v = parse_rat(s).unwrap();
            assert_eq!(rat_str(&v), s);
        }
        assert_eq!(rat_str(&parse_rat("4/2").unwrap()), "2");
        assert_eq!(rat_str(&parse_rat("3/-6").unwrap()), "-1/2");
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
        assert!(parse_rat("1/2/3").is_none());
    }

    #[test]
    fn sqrt_detection() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
        assert_eq!(rational_sqrt(&rat(0, 1)), Some(int(0)));
    }
}
