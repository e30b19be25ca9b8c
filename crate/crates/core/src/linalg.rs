//! Exact linear algebra over the rationals.
//!
//! Ranks and determinants go through fraction-free (Bareiss) elimination on
//! integer-cleared rows; kernels and coordinate solves use rational
//! Gauss-Jordan. No floating point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{clear_denominators, primitive_part, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<Q>>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![vec![Q::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Q::one();
        }
        m
    }

    pub fn from_rows(data: Vec<Vec<Q>>) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        debug_assert!(data.iter().all(|r| r.len() == cols));
        Mat { rows, cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j][i] = self.data[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (k, a) in self.data[i].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i][j] += &other.data[i][j];
            }
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[i][j] -= &other.data[i][j];
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Mat {
        let mut out = self.clone();
        for row in &mut out.data {
            for x in row.iter_mut() {
                *x *= c;
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                let mut s = Q::zero();
                for (a, x) in row.iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect()
    }

    pub fn pow(&self, e: u32) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut acc = Mat::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self.data[i][i].clone()).sum()
    }

    /// Rank by fraction-free Gaussian elimination on integer-cleared rows.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = self
            .data
            .iter()
            .map(|r| {
                let mut row = clear_denominators(r);
                primitive_part(&mut row);
                row
            })
            .collect();
        bareiss_echelon(&mut m)
    }

    /// Determinant via Bareiss on the rational matrix (denominators tracked).
    pub fn det(&self) -> Q {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Q::one();
        }
        // Clear denominators row by row; det scales by the product.
        let mut scale = Q::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in &self.data {
            let mut lcm = BigInt::one();
            for x in r {
                if !x.is_zero() {
                    lcm = num_integer::lcm(lcm, x.denom().clone());
                }
            }
            scale *= Q::from_integer(lcm.clone());
            m.push(r.iter().map(|x| x.numer() * &lcm / x.denom()).collect());
        }
        let d = bareiss_det(&mut m);
        Q::from_integer(d) / scale
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].clone().recip();
            for x in m[r][c..].iter_mut() {
                *x *= &inv;
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.cols {
                        let t = &m[r][j] * &f;
                        m[i][j] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (Mat::from_rows(m), pivots)
    }

    /// Basis of the right null space.
    pub fn kernel_basis(&self) -> Vec<Vec<Q>> {
        let (rr, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -rr.data[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Left inverse `L` with `L * self == I_cols`; requires full column rank.
    pub fn left_inverse(&self) -> Result<Mat> {
        let n = self.rows;
        // Row-reduce [self | I]; pivot rows of the augmented part give L.
        let mut aug = Mat::zeros(n, self.cols + n);
        for i in 0..n {
            for j in 0..self.cols {
                aug.data[i][j] = self.data[i][j].clone();
            }
            aug.data[i][self.cols + i] = Q::one();
        }
        let (rr, pivots) = aug.rref();
        let lead: Vec<usize> = pivots.iter().copied().filter(|&c| c < self.cols).collect();
        if lead.len() != self.cols {
            return Err(Error::Invalid("matrix does not have full column rank".into()));
        }
        let mut l = Mat::zeros(self.cols, n);
        for (r, _) in lead.iter().enumerate() {
            for j in 0..n {
                l.data[r][j] = rr.data[r][self.cols + j].clone();
            }
        }
        Ok(l)
    }

    /// Solves `self * x = b` exactly, if consistent.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.data[i][j] = self.data[i][j].clone();
            }
            aug.data[i][self.cols] = b[i].clone();
        }
        let (rr, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![Q::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = rr.data[r][self.cols].clone();
        }
        Some(x)
    }
}

/// Fraction-free (Bareiss) forward elimination; returns the rank.
fn bareiss_echelon(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &m[i][j] * &pivot - &m[i][c] * &m[r][j];
                m[i][j] = &t / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Bareiss determinant of a square integer matrix (consumes the buffer).
fn bareiss_det(m: &mut Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(k, p);
            sign = -sign;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &pivot - &m[i][k] * &m[k][j];
                m[i][j] = &t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = pivot;
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// An exact basis of a linear subspace, stored in echelonized form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub ambient_dim: usize,
    pub vectors: Vec<Vec<Q>>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let id = Mat::identity(ambient_dim);
        SubspaceBasis {
            ambient_dim,
            vectors: id.data,
        }
    }

    /// Reduces a spanning set to an independent echelon basis.
    pub fn from_spanning(ambient_dim: usize, vecs: Vec<Vec<Q>>) -> Self {
        debug_assert!(vecs.iter().all(|v| v.len() == ambient_dim));
        if vecs.is_empty() {
            return SubspaceBasis::zero(ambient_dim);
        }
        let (rr, pivots) = Mat::from_rows(vecs).rref();
        let vectors = rr.data.into_iter().take(pivots.len()).collect();
        SubspaceBasis {
            ambient_dim,
            vectors,
        }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Matrix with the basis vectors as columns.
    pub fn as_columns(&self) -> Mat {
        Mat::from_rows(self.vectors.clone()).transpose()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        let mut stacked = self.vectors.clone();
        stacked.push(v.to_vec());
        Mat::from_rows(stacked).rank() == self.dim()
    }

    /// Coordinates of `v` in this basis, if `v` lies in the span.
    pub fn coords_of(&self, v: &[Q]) -> Option<Vec<Q>> {
        if self.vectors.is_empty() {
            return v.iter().all(|x| x.is_zero()).then(Vec::new);
        }
        self.as_columns().solve(v)
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.vectors.iter().all(|v| self.contains(v))
    }

    /// Covectors annihilating the subspace (basis of the left null space of
    /// the column matrix).
    pub fn annihilator(&self) -> Vec<Vec<Q>> {
        Mat::from_rows(self.vectors.clone()).kernel_basis()
    }
}

/// dim(A + B) computed as the rank of the stacked bases.
pub fn sum_dim(a: &SubspaceBasis, b: &SubspaceBasis) -> usize {
    assert_eq!(a.ambient_dim, b.ambient_dim);
    let mut rows = a.vectors.clone();
    rows.extend(b.vectors.clone());
    if rows.is_empty() {
        return 0;
    }
    Mat::from_rows(rows).rank()
}

/// dim(A ∩ B) = dim A + dim B − dim(A + B).
pub fn intersection_dim(a: &SubspaceBasis, b: &SubspaceBasis) -> usize {
    a.dim() + b.dim() - sum_dim(a, b)
}
