//! Dense matrices over an exact scalar ring, Kronecker products, and the
//! Smith normal form over a Euclidean ring of integers.

use std::fmt;

use num_integer::Integer;
use num_traits::{Num, Signed};

use crate::error::{Error, Result};

/// Row-major `rows × cols` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Num> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Matrix<T> {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix<T> {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Matrix<T>> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: T) {
        self.data[i * self.cols + j] = x;
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[T]>::to_vec).collect()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * other.get(k, j).clone();
                }
            }
        }
        Ok(out)
    }

    /// `M ⊗ D`: the block matrix with `(i, j)` block `M_ij · D`.
    pub fn kron(&self, d: &Matrix<T>) -> Matrix<T> {
        let (r, c) = (self.rows * d.rows, self.cols * d.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let m = self.get(i, j);
                for p in 0..d.rows {
                    for q in 0..d.cols {
                        out.set(i * d.rows + p, j * d.cols + q, m.clone() * d.get(p, q).clone());
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(blocks: &[&Matrix<T>]) -> Matrix<T> {
        let r = blocks.iter().map(|b| b.rows).sum();
        let c = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() })
            })
    }

    /// Inverse by Gauss–Jordan elimination; every nonzero pivot must be a
    /// unit of `T`, so this is meant for fields such as `Ratio<BigInt>`.
    pub fn inverse(&self) -> Option<Matrix<T>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv: Matrix<T> = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.get(col, j).clone() / p.clone());
                inv.set(col, j, inv.get(col, j).clone() / p.clone());
            }
            for r in (0..n).filter(|&r| r != col) {
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, a.get(r, j).clone() - f.clone() * a.get(col, j).clone());
                    inv.set(r, j, inv.get(r, j).clone() - f.clone() * inv.get(col, j).clone());
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<T: Clone + Integer + Signed> Matrix<T> {
    /// Nonzero invariant factors `d_1 | d_2 | ...`, all positive.
    pub fn smith_invariants(&self) -> Vec<T> {
        let mut a = self.clone();
        let mut out = Vec::new();
        let mut t = 0;
        while t < a.rows.min(a.cols) {
            // Smallest nonzero entry of the remaining block as pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..a.rows {
                for j in t..a.cols {
                    let x = a.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(p, q)| x.abs() < a.get(p, q).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((p, q)) = best else { break };
            a.swap_rows(t, p);
            a.swap_cols(t, q);
            let mut clean = true;
            let pivot = a.get(t, t).clone();
            for i in t + 1..a.rows {
                let f = a.get(i, t).div_floor(&pivot);
                for j in t..a.cols {
                    a.set(i, j, a.get(i, j).clone() - f.clone() * a.get(t, j).clone());
                }
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..a.cols {
                let f = a.get(t, j).div_floor(&pivot);
                for i in t..a.rows {
                    a.set(i, j, a.get(i, j).clone() - f.clone() * a.get(i, t).clone());
                }
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any row not divisible by the pivot into row t.
            let bad = (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            if let Some(i) = bad {
                for j in t..a.cols {
                    a.set(t, j, a.get(t, j).clone() + a.get(i, j).clone());
                }
                continue;
            }
            out.push(pivot.abs());
            t += 1;
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.smith_invariants().len()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn int(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn products() {
        let a = int(&[&[1, 2], &[0, 1]]);
        let b = int(&[&[1, 0], &[2, 1]]);
        assert_eq!(a.mul(&b).unwrap(), int(&[&[5, 2], &[2, 1]]));
        assert!(a.mul(&int(&[&[1, 2, 3]])).is_err());
        let k = int(&[&[0, 1], &[1, 0]]).kron(&a);
        assert_eq!(k.rows(), 4);
        assert_eq!(*k.get(0, 2), BigInt::from(1));
        assert_eq!(*k.get(2, 1), BigInt::from(2));
        let d = Matrix::block_diag(&[&a, &Matrix::identity(2)]);
        assert_eq!(*d.get(0, 1), BigInt::from(2));
        assert_eq!(*d.get(3, 3), BigInt::from(1));
        assert!(Matrix::from_rows(vec![vec![BigInt::from(1)], vec![]]).is_err());
    }

    #[test]
    fn rational_inverse() {
        let a = int(&[&[2, 1], &[1, 1]]).map(|x| BigRational::from_integer(x.clone()));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        let singular = int(&[&[1, 2], &[2, 4]]).map(|x| BigRational::from_integer(x.clone()));
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn smith() {
        let m = int(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(m.smith_invariants(), [2, 6, 12].map(BigInt::from));
        assert_eq!(int(&[&[0, 0], &[0, 0]]).rank(), 0);
        assert_eq!(int(&[&[1, 1, 0], &[1, 1, 0]]).rank(), 1);
        assert_eq!(int(&[&[2, 0], &[0, 3]]).smith_invariants(), [1, 6].map(BigInt::from));
        let small: Matrix<i64> = Matrix::from_rows(vec![vec![4, 6], vec![6, 9]]).unwrap();
        assert_eq!(small.smith_invariants(), [1]);
    }
}
