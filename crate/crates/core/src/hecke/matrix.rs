use std::fmt;

use crate::exactnum::Ring;

/// Dense square matrix over an exact ring. Products skip zero entries,
/// which matters for the sparse generator matrices of Hecke modules.
#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            entries: vec![R::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::scalar(n, R::one())
    }

    pub fn scalar(n: usize, c: R) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: R) {
        self.entries[i * self.n + j] = x;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = std::mem::replace(&mut out.entries[i * n + j], R::zero());
                    out.entries[i * n + j] = cur + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Matrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn trace(&self) -> R {
        (0..self.n).fold(R::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Matrix::identity(self.n);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Product of `mats[i]` over the word, left to right.
    pub fn product<'a>(n: usize, factors: impl IntoIterator<Item = &'a Matrix<R>>) -> Self
    where
        R: 'a,
    {
        factors
            .into_iter()
            .fold(Matrix::identity(n), |acc, m| acc.mul(m))
    }

    /// The scalar `c` when the matrix is `c * Id`.
    pub fn as_scalar(&self) -> Option<R> {
        let c = self.get(0, 0).clone();
        (*self == Matrix::scalar(self.n, c.clone())).then_some(c)
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[R]> = self.entries.chunks(self.n.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn products_and_powers() {
        let a = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.pow(5), m(&[&[1, 5], &[0, 1]]));
        assert_eq!(a.mul(&Matrix::identity(2)), a);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(b.pow(2).as_scalar(), Some(int(1)));
        assert_eq!(a.as_scalar(), None);
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.scale(&int(3)).trace(), int(6));
    }
}
