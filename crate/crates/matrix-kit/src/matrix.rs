//! Dense matrices over exact rationals.

use std::fmt;

use grassmann_core::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::MatrixError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::ShapeMismatch);
        }
        Ok(RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> RatMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch);
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) + other.get(i, j)
        }))
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix, MatrixError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatrixError::ShapeMismatch);
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, j) - other.get(i, j)
        }))
    }

    pub fn neg(&self) -> RatMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| -self.get(i, j))
    }

    pub fn scale(&self, by: &Scalar) -> RatMatrix {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) * by)
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::ShapeMismatch);
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..self.cols {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        }))
    }

    pub fn trace(&self) -> Result<Scalar, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        let mut acc = Scalar::zero();
        for i in 0..self.rows {
            acc += self.get(i, i);
        }
        Ok(acc)
    }

    /// Determinant by fraction-free Bareiss elimination: denominators are
    /// cleared row by row, the integer elimination runs with exact divisions,
    /// and the cleared factors are divided back out at the end.
    pub fn determinant(&self) -> Result<Scalar, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one());
        }
        let mut cleared = BigInt::one();
        let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut lcm = BigInt::one();
            for j in 0..n {
                lcm = lcm.lcm(self.get(i, j).denom());
            }
            work.push(
                (0..n)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&lcm / e.denom())
                    })
                    .collect(),
            );
            cleared *= &lcm;
        }

        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if work[k][k].is_zero() {
                let swap = (k + 1..n).find(|&r| !work[r][k].is_zero());
                match swap {
                    Some(r) => {
                        work.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(Scalar::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &work[i][j] * &work[k][k] - &work[i][k] * &work[k][j];
                    work[i][j] = num / &prev;
                }
                work[i][k] = BigInt::zero();
            }
            prev = work[k][k].clone();
        }
        let mut det = Scalar::new(work[n - 1][n - 1].clone(), cleared);
        if sign < 0 {
            det = -det;
        }
        Ok(det)
    }

    /// Exact inverse; None when singular.
    pub fn inverse(&self) -> Result<Option<RatMatrix>, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !work.get(r, col).is_zero()) {
                Some(p) => p,
                None => return Ok(None),
            };
            if pivot != col {
                for j in 0..n {
                    let a = work.get(col, j).clone();
                    let b = work.get(pivot, j).clone();
                    work.set(col, j, b);
                    work.set(pivot, j, a);
                    let a = inv.get(col, j).clone();
                    let b = inv.get(pivot, j).clone();
                    inv.set(col, j, b);
                    inv.set(pivot, j, a);
                }
            }
            let p = work.get(col, col).clone();
            for j in 0..n {
                work.set(col, j, work.get(col, j) / &p);
                inv.set(col, j, inv.get(col, j) / &p);
            }
            for r in 0..n {
                if r == col || work.get(r, col).is_zero() {
                    continue;
                }
                let f = work.get(r, col).clone();
                for j in 0..n {
                    let w = work.get(r, j) - &(work.get(col, j) * &f);
                    work.set(r, j, w);
                    let v = inv.get(r, j) - &(inv.get(col, j) * &f);
                    inv.set(r, j, v);
                }
            }
        }
        Ok(Some(inv))
    }

    /// Largest absolute entry, handy for normalizing displays.
    pub fn max_abs(&self) -> Scalar {
        self.data
            .iter()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(Scalar::zero)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| grassmann_core::scalar::rat_str(self.get(i, j)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
