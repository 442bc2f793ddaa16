//! Small dense matrices over the rationals.

use std::ops::{Index, IndexMut, Mul};

use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Rational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// `J A^t J`, the transpose across the anti-diagonal.
    pub fn antitranspose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| {
            self[(self.rows - 1 - j, self.cols - 1 - i)].clone()
        })
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                let e = &self[(i, j)];
                match i.cmp(&j) {
                    std::cmp::Ordering::Less => e.is_zero(),
                    std::cmp::Ordering::Equal => e.is_one(),
                    std::cmp::Ordering::Greater => true,
                }
            })
        })
    }

    /// Gauss-Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let scale = a[(col, col)].recip();
            for j in 0..n {
                a[(col, j)] *= &scale;
                inv[(col, j)] *= &scale;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in 0..n {
                    let da = &factor * &a[(col, j)];
                    a[(r, j)] -= da;
                    let di = &factor * &inv[(col, j)];
                    inv[(r, j)] -= di;
                }
            }
        }
        Some(inv)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| &self[(i, k)] * &rhs[(k, j)]).sum()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn inverse_of_pascal() {
        let n = 5;
        let pascal = Matrix::from_fn(n, n, |i, j| int(crate::combinatorics::binom(i as i64, j as i64)));
        let inv = pascal.inverse().unwrap();
        assert!((&pascal * &inv).is_identity());
        for i in 0..n {
            for j in 0..n {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                assert_eq!(inv[(i, j)], int(crate::combinatorics::binom(i as i64, j as i64) * sign));
            }
        }
        assert!(pascal.is_lower_unitriangular());
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = Matrix::from_fn(2, 2, |_, _| int(1));
        assert!(m.inverse().is_none());
    }

    #[test]
    fn antitranspose_of_product() {
        let a = Matrix::from_fn(3, 3, |i, j| int((i * 3 + j) as i64));
        let b = Matrix::from_fn(3, 3, |i, j| int((i as i64 - j as i64).pow(2)));
        assert_eq!((&a * &b).antitranspose(), &b.antitranspose() * &a.antitranspose());
        assert_eq!(a.antitranspose().antitranspose(), a);
    }
}
