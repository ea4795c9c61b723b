//! Compound matrices and the star duality.
//!
//! The k-th compound of an n x n matrix collects the k x k minors, rows and
//! columns both running over the k-subsets of 1..=n in lexicographic order.
//! The star of a matrix indexed by k-subsets conjugates the transpose with
//! the signed complement pairing, producing a matrix indexed by the
//! complementary (n-k)-subsets. Stars of compounds generalize the classical
//! adjugate, which is recovered at order n-1.

use grassmann_core::Scalar;
use num_traits::One;

use crate::matrix::RatMatrix;
use crate::subsets::{binomial, complement, k_subsets, subset_position, subset_sign};
use crate::MatrixError;

/// The k-th compound C_k(B). Order 0 gives the 1 x 1 matrix [1].
pub fn compound(b: &RatMatrix, k: u8) -> Result<RatMatrix, MatrixError> {
    if !b.is_square() {
        return Err(MatrixError::NotSquare);
    }
    let n = b.rows();
    if (k as usize) > n {
        return Err(MatrixError::BadOrder);
    }
    if k == 0 {
        let mut m = RatMatrix::zeros(1, 1);
        m.set(0, 0, Scalar::one());
        return Ok(m);
    }
    let subsets = k_subsets(n as u8, k);
    let dim = subsets.len();
    let mut out = RatMatrix::zeros(dim, dim);
    for (i, rows) in subsets.iter().enumerate() {
        for (j, cols) in subsets.iter().enumerate() {
            let minor = RatMatrix::from_fn(k as usize, k as usize, |r, c| {
                b.get((rows[r] - 1) as usize, (cols[c] - 1) as usize).clone()
            });
            out.set(i, j, minor.determinant().expect("square minor"));
        }
    }
    Ok(out)
}

/// The signed complement pairing E^(k) for subsets of 1..=n: rows run over
/// (n-k)-subsets, columns over k-subsets, and the (L, M) entry is the sign of
/// the permutation (L, M) of 1..=n when M is the complement of L, else 0.
pub fn e_matrix(k: u8, n: u8) -> Result<RatMatrix, MatrixError> {
    if k > n {
        return Err(MatrixError::BadOrder);
    }
    let rows = k_subsets(n, n - k);
    let cols = k_subsets(n, k);
    let mut out = RatMatrix::zeros(rows.len(), cols.len());
    for (i, l) in rows.iter().enumerate() {
        let comp = complement(n, l);
        let j = subset_position(n, &comp);
        let sign = subset_sign(l);
        out.set(i, j, Scalar::from_integer(sign.into()));
    }
    Ok(out)
}

/// The star B* = E^(k) B^T E^(k)^T of a matrix indexed by the k-subsets of
/// 1..=n. Entry (L, M) of the result, with L and M (n-k)-subsets, is
/// sgn(L) sgn(M) B_(comp M, comp L).
pub fn star(b: &RatMatrix, k: u8, n: u8) -> Result<RatMatrix, MatrixError> {
    if k > n {
        return Err(MatrixError::BadOrder);
    }
    let dim = binomial(n as usize, k as usize);
    if b.rows() != dim || b.cols() != dim {
        return Err(MatrixError::SizeMismatch);
    }
    let indices = k_subsets(n, n - k);
    let out_dim = indices.len();
    let mut out = RatMatrix::zeros(out_dim, out_dim);
    for (i, l) in indices.iter().enumerate() {
        let lc = complement(n, l);
        let lc_pos = subset_position(n, &lc);
        let sl = subset_sign(l);
        for (j, m) in indices.iter().enumerate() {
            let mc = complement(n, m);
            let mc_pos = subset_position(n, &mc);
            let sign = sl * subset_sign(m);
            let mut v = b.get(mc_pos, lc_pos).clone();
            if sign < 0 {
                v = -v;
            }
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// C_k(B)* : the starred k-th compound, indexed by (n-k)-subsets. At order
/// n-1 this is the classical adjugate.
pub fn supplementary_compound(b: &RatMatrix, k: u8) -> Result<RatMatrix, MatrixError> {
    if !b.is_square() {
        return Err(MatrixError::NotSquare);
    }
    let n = b.rows() as u8;
    if k > n {
        return Err(MatrixError::BadOrder);
    }
    star(&compound(b, k)?, k, n)
}

/// Classical adjugate via signed cofactor transpose, kept independent of the
/// compound route.
pub fn adjugate(b: &RatMatrix) -> Result<RatMatrix, MatrixError> {
    if !b.is_square() {
        return Err(MatrixError::NotSquare);
    }
    let n = b.rows();
    if n == 0 {
        return Err(MatrixError::BadOrder);
    }
    if n == 1 {
        let mut m = RatMatrix::zeros(1, 1);
        m.set(0, 0, Scalar::one());
        return Ok(m);
    }
    let mut out = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let minor = RatMatrix::from_fn(n - 1, n - 1, |r, c| {
                let rr = if r < j { r } else { r + 1 };
                let cc = if c < i { c } else { c + 1 };
                b.get(rr, cc).clone()
            });
            let mut v = minor.determinant().expect("square minor");
            if (i + j) % 2 == 1 {
                v = -v;
            }
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// detB times the identity, the product rule target for adjugates.
pub fn det_times_identity(b: &RatMatrix) -> Result<RatMatrix, MatrixError> {
    let det = b.determinant()?;
    Ok(RatMatrix::identity(b.rows()).scale(&det))
}
