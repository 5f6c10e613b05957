//! Commutants and intertwiners by exact linear algebra.
//!
//! Irreducibility over Q(i,√2) is decided operationally: the field is not
//! algebraically closed, so "commutant dimension 1" is the working
//! definition of irreducible. Every case treated here has commutant
//! dimension 1, where that reading coincides with the usual one.

use super::{nullspace, solve::rank, LinalgError, Mat};
use crate::scalar::FieldK;
use num_traits::Zero;

/// Dimension of {X : X·m = m·X for all m}, via the nullity of the stacked
/// linear system on d² unknowns.
pub fn commutant_dimension(mats: &[Mat<FieldK>]) -> Result<usize, LinalgError> {
    if mats.is_empty() {
        return Err(LinalgError::EmptyInput);
    }
    let d = mats[0].rows();
    for m in mats {
        if !m.is_square() || m.rows() != d {
            return Err(LinalgError::ShapeMismatch {
                left: (d, d),
                right: (m.rows(), m.cols()),
            });
        }
    }
    let sys = commutation_system(mats, mats);
    Ok(d * d - rank(&sys))
}

/// Rows of the linear system X·A_k − B_k·X = 0 in the d² unknowns X_{ij}
/// (row-major).
fn commutation_system(a: &[Mat<FieldK>], b: &[Mat<FieldK>]) -> Mat<FieldK> {
    let d = a[0].rows();
    let unknowns = d * d;
    let mut rows: Vec<Vec<FieldK>> = Vec::with_capacity(a.len() * unknowns);
    for (am, bm) in a.iter().zip(b.iter()) {
        for i in 0..d {
            for j in 0..d {
                // Σ_k X_{ik}·a_{kj} − Σ_k b_{ik}·X_{kj} = 0
                let mut row = vec![FieldK::zero(); unknowns];
                for k in 0..d {
                    row[i * d + k] = row[i * d + k].clone() + am[(k, j)].clone();
                    row[k * d + j] = row[k * d + j].clone() - bm[(i, k)].clone();
                }
                rows.push(row);
            }
        }
    }
    Mat::from_rows(rows)
}

fn vec_to_matrix(v: &[FieldK], d: usize) -> Mat<FieldK> {
    Mat::from_fn(d, d, |i, j| v[i * d + j].clone())
}

/// An invertible X with X·A_k = B_k·X for all k, or `None` when the two
/// generator lists are not equivalent. For intertwiner spaces of dimension
/// above one, invertibility of a generic combination is decided by exact
/// evaluation on an integer grid large enough to separate the determinant
/// polynomial from zero.
pub fn intertwiner(
    a: &[Mat<FieldK>],
    b: &[Mat<FieldK>],
) -> Result<Option<Mat<FieldK>>, LinalgError> {
    if a.is_empty() || a.len() != b.len() {
        return Err(LinalgError::EmptyInput);
    }
    let d = a[0].rows();
    for m in a.iter().chain(b.iter()) {
        if !m.is_square() || m.rows() != d {
            return Err(LinalgError::ShapeMismatch {
                left: (d, d),
                right: (m.rows(), m.cols()),
            });
        }
    }
    let sys = commutation_system(a, b);
    let kernel = nullspace(&sys);
    if kernel.is_empty() {
        return Ok(None);
    }
    let basis: Vec<Mat<FieldK>> = kernel.iter().map(|v| vec_to_matrix(v, d)).collect();
    // The determinant of Σ tᵢ·Xᵢ has degree ≤ d in each tᵢ, so if it
    // vanishes on the full grid {0..d}^k it vanishes identically and no
    // invertible intertwiner exists.
    let grid = d + 1;
    let k = basis.len();
    let mut counter = vec![0usize; k];
    loop {
        let mut cand: Mat<FieldK> = Mat::zeros(d, d);
        for (idx, &t) in counter.iter().enumerate() {
            if t > 0 {
                cand = cand.add(&basis[idx].scaled(&FieldK::from_int(t as i64)));
            }
        }
        if super::inverse(&cand).is_some() {
            return Ok(Some(cand));
        }
        // advance the mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(None);
            }
            counter[pos] += 1;
            if counter[pos] < grid {
                break;
            }
            counter[pos] = 0;
            pos += 1;
        }
    }
}
