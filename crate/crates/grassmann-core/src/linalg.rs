//! Minimal exact dense routines for the small systems solved inside this
//! crate. Heavier matrix machinery lives downstream.

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Exact inverse by Gauss-Jordan elimination; None when singular.
pub fn invert(a: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return None;
    }
    let mut work: Vec<Vec<Scalar>> = a.to_vec();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let p = work[col][col].clone();
        for j in 0..n {
            work[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let f = work[r][col].clone();
            for j in 0..n {
                let w = &work[col][j] * &f;
                work[r][j] -= w;
                let v = &inv[col][j] * &f;
                inv[r][j] -= v;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn inverts_a_small_matrix() {
        let a = vec![vec![int(2), int(1)], vec![int(5), int(3)]];
        let inv = invert(&a).unwrap();
        assert_eq!(inv[0], vec![int(3), int(-1)]);
        assert_eq!(inv[1], vec![int(-5), int(2)]);
    }

    #[test]
    fn rejects_singular() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(invert(&a).is_none());
    }
}
