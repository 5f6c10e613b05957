//! Dense exact linear algebra over any exact scalar ring.
//!
//! Matrices are generic over the coefficient ring; elimination-based
//! routines (nullspace, inverse, commutants, intertwiners) additionally
//! require a field. Concrete aliases for this crate live at the root:
//! `MatK` over Q(i,√2) and `MatL` over Laurent polynomials.

mod charpoly;
mod commutant;
mod solve;

pub use charpoly::{charpoly, CharPoly, Factored};
pub use commutant::{commutant_dimension, intertwiner};

use crate::scalar::{FieldK, Ring};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
    NotSquare,
    SiteOutOfRange { site: usize, chain_length: usize },
    EmptyInput,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::ShapeMismatch { left, right } => {
                write!(f, "shape mismatch: {}x{} vs {}x{}", left.0, left.1, right.0, right.1)
            }
            LinalgError::NotSquare => write!(f, "matrix is not square"),
            LinalgError::SiteOutOfRange { site, chain_length } => {
                write!(f, "site {site} out of range for chain of length {chain_length}")
            }
            LinalgError::EmptyInput => write!(f, "empty input"),
        }
    }
}

impl std::error::Error for LinalgError {}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "no rows");
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from integer entries; handy for the many ±1/0 matrices here.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&n| T::from_int(n)).collect())
                .collect(),
        )
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

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        let mut t = T::zero();
        for i in 0..self.rows {
            t = t + self[(i, i)].clone();
        }
        t
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scaled(&self, s: &T) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.cols, rhs.rows,
            "shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b.clone();
                    let cur = std::mem::replace(&mut out[(i, j)], T::zero());
                    out[(i, j)] = cur + prod;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs).sub(&rhs.matmul(self))
    }

    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs).add(&rhs.matmul(self))
    }

    pub fn pow(&self, mut n: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.matmul(&base);
            }
            base = base.matmul(&base);
            n >>= 1;
        }
        acc
    }

    /// Kronecker product; `kron(a,b)[(i,k),(j,l)] = a[i,j]·b[k,l]` with the
    /// first factor major in the combined index.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self[(i, j)].is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        if rhs[(k, l)].is_zero() {
                            continue;
                        }
                        out[(i * rhs.rows + k, j * rhs.cols + l)] =
                            self[(i, j)].clone() * rhs[(k, l)].clone();
                    }
                }
            }
        }
        out
    }

    /// Trace out the first tensor factor of dimension `d0`.
    pub fn partial_trace_first(&self, d0: usize) -> Self {
        assert!(self.is_square());
        assert_eq!(self.rows % d0, 0);
        let dq = self.rows / d0;
        let mut out = Self::zeros(dq, dq);
        for h in 0..d0 {
            for i in 0..dq {
                for j in 0..dq {
                    let cur = std::mem::replace(&mut out[(i, j)], T::zero());
                    out[(i, j)] = cur + self[(h * dq + i, h * dq + j)].clone();
                }
            }
        }
        out
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// True when `self = c·I`; returns the scalar.
    pub fn scalar_multiple_of_identity(&self) -> Option<T> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self[(0, 0)].clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { c.clone() } else { T::zero() };
                if self[(i, j)] != want {
                    return None;
                }
            }
        }
        Some(c)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<'a, T: Ring> Add for &'a Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: Self) -> Mat<T> {
        Mat::add(self, rhs)
    }
}

impl<'a, T: Ring> Sub for &'a Mat<T> {
    type Output = Mat<T>;
    fn sub(self, rhs: Self) -> Mat<T> {
        Mat::sub(self, rhs)
    }
}

impl<'a, T: Ring> Mul for &'a Mat<T> {
    type Output = Mat<T>;
    fn mul(self, rhs: Self) -> Mat<T> {
        self.matmul(rhs)
    }
}

impl<T: Ring> Neg for &Mat<T> {
    type Output = Mat<T>;
    fn neg(self) -> Mat<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Mat<FieldK> {
    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }
}

/// Embed a two-site operator into an `L`-site chain on the ordered pair of
/// sites `(p, q)`, 1-indexed, identity elsewhere. The 4×4 operator indexes
/// its legs as (p, q) with p major.
pub fn embed_pair<T: Ring>(m: &Mat<T>, p: usize, q: usize, l: usize) -> Result<Mat<T>, LinalgError> {
    assert_eq!((m.rows(), m.cols()), (4, 4), "local operator must be 4x4");
    if p == q || p < 1 || q < 1 || p > l || q > l {
        return Err(LinalgError::SiteOutOfRange { site: p.max(q), chain_length: l });
    }
    let dim = 1usize << l;
    let bit = |idx: usize, site: usize| (idx >> (l - site)) & 1;
    let with_bits = |idx: usize, a: usize, b: usize| {
        let mut out = idx & !(1 << (l - p)) & !(1 << (l - q));
        out |= a << (l - p);
        out |= b << (l - q);
        out
    };
    let mut out = Mat::zeros(dim, dim);
    for col in 0..dim {
        let (jp, jq) = (bit(col, p), bit(col, q));
        for a in 0..2 {
            for b in 0..2 {
                let entry = &m[(2 * a + b, 2 * jp + jq)];
                if entry.is_zero() {
                    continue;
                }
                let row = with_bits(col, a, b);
                let cur = std::mem::replace(&mut out[(row, col)], T::zero());
                out[(row, col)] = cur + entry.clone();
            }
        }
    }
    Ok(out)
}

/// Embed a nearest-neighbour operator at `(site, site+1)`; `site = L` wraps
/// to the pair `(L, 1)`.
pub fn embed_two_site<T: Ring>(m: &Mat<T>, site: usize, l: usize) -> Result<Mat<T>, LinalgError> {
    if site >= 1 && site <= l.saturating_sub(1) {
        embed_pair(m, site, site + 1, l)
    } else if site == l && l >= 2 {
        embed_pair(m, l, 1, l)
    } else {
        Err(LinalgError::SiteOutOfRange { site, chain_length: l })
    }
}

/// Embed a single-site operator at `site` (1-indexed) of an `L`-site chain.
pub fn embed_one_site<T: Ring>(m: &Mat<T>, site: usize, l: usize) -> Result<Mat<T>, LinalgError> {
    assert_eq!((m.rows(), m.cols()), (2, 2));
    if site < 1 || site > l {
        return Err(LinalgError::SiteOutOfRange { site, chain_length: l });
    }
    let mut out = Mat::identity(1);
    for k in 1..=l {
        let factor = if k == site {
            m.clone()
        } else {
            Mat::identity(2)
        };
        out = out.kron(&factor);
    }
    Ok(out)
}

pub use solve::{inverse, nullspace, rank, rref, solve};
