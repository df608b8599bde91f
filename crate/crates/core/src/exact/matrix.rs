//! Dense rectangular matrices over any of the exact scalar rings.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::exact::gaussian::Height;
use crate::exact::ring::Ring;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(rows * cols, data.len(), "entry count mismatch");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zero_like(n: usize, m: usize, exemplar: &T) -> Self {
        Matrix {
            rows: n,
            cols: m,
            data: vec![exemplar.ring_zero(); n * m],
        }
    }

    pub fn identity_like(n: usize, exemplar: &T) -> Self {
        let mut m = Matrix::zero_like(n, n, exemplar);
        for i in 0..n {
            m[(i, i)] = exemplar.ring_one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&T) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.ring_add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.ring_sub(b))
                .collect(),
        }
    }

    /// Naive cubic product (fast multiplication formulas are out of scope;
    /// structured zero entries are skipped, which is what makes the
    /// sum-augmented shape cheap).
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let zero = self.data[0].ring_zero();
        let mut out = Matrix::zero_like(self.rows, rhs.cols, &zero);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.ring_is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.ring_is_zero() {
                        continue;
                    }
                    let t = a.ring_mul(b);
                    out[(i, j)] = out[(i, j)].ring_add(&t);
                }
            }
        }
        out
    }

    /// self * column vector.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let zero = self.data[0].ring_zero();
        let mut out = vec![zero; self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.ring_is_zero() || v[k].ring_is_zero() {
                    continue;
                }
                out[i] = out[i].ring_add(&a.ring_mul(&v[k]));
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.ring_mul(c))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<T: Height> Height for Matrix<T> {
    fn height(&self) -> u64 {
        self.data.iter().map(|c| c.height()).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn m2(a: i64, b: i64, c: i64, d: i64) -> Matrix<BigInt> {
        Matrix::new(2, 2, vec![a, b, c, d].into_iter().map(BigInt::from).collect())
    }

    #[test]
    fn product_and_identity() {
        let a = m2(1, 2, 3, 4);
        let b = m2(5, 6, 7, 8);
        assert_eq!(a.mul(&b), m2(19, 22, 43, 50));
        let id = Matrix::identity_like(2, &BigInt::from(0));
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
    }

    #[test]
    fn vector_apply() {
        let a = m2(1, 2, 3, 4);
        let v = vec![BigInt::from(5), BigInt::from(-1)];
        assert_eq!(a.mul_vec(&v), vec![BigInt::from(3), BigInt::from(11)]);
    }
}
