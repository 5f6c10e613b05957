//! Exact Gaussian elimination over a field.

use super::Mat;
use crate::scalar::Field;


/// Reduced row echelon form; returns the reduced matrix and pivot columns.
pub fn rref<T: Field>(m: &Mat<T>) -> (Mat<T>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = tmp;
            }
        }
        let inv = a[(r, c)].inverse().expect("pivot is nonzero");
        for j in 0..cols {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !a[(i, c)].is_zero() {
                let f = a[(i, c)].clone();
                for j in 0..cols {
                    let delta = f.clone() * a[(r, j)].clone();
                    a[(i, j)] = a[(i, j)].clone() - delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<T: Field>(m: &Mat<T>) -> usize {
    rref(m).1.len()
}

/// Exact basis of the right kernel. Rank–nullity is asserted in debug builds.
pub fn nullspace<T: Field>(m: &Mat<T>) -> Vec<Vec<T>> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![T::zero(); cols];
        v[f] = T::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r[(row, f)].clone();
        }
        basis.push(v);
    }
    debug_assert_eq!(pivots.len() + basis.len(), cols, "rank-nullity violated");
    debug_assert!(basis
        .iter()
        .all(|v| m.matvec(v).iter().all(|x| x.is_zero())));
    basis
}

pub fn inverse<T: Field>(m: &Mat<T>) -> Option<Mat<T>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let aug = Mat::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m[(r, c)].clone()
        } else if c - n == r {
            T::one()
        } else {
            T::zero()
        }
    });
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Mat::from_fn(n, n, |r, c| red[(r, n + c)].clone()))
}

/// Solve `m·x = b` exactly; `None` if inconsistent. When the solution space
/// has positive dimension an arbitrary representative is returned.
pub fn solve<T: Field>(m: &Mat<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(m.rows(), b.len());
    let (rows, cols) = (m.rows(), m.cols());
    let aug = Mat::from_fn(rows, cols + 1, |r, c| {
        if c < cols {
            m[(r, c)].clone()
        } else {
            b[r].clone()
        }
    });
    let (red, pivots) = rref(&aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![T::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = red[(row, cols)].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldK;
    use num_traits::One;

    type MatK = Mat<FieldK>;

    #[test]
    fn nullspace_of_identity_is_empty() {
        let m: MatK = Mat::identity(4);
        assert!(nullspace(&m).is_empty());
    }

    #[test]
    fn nullspace_of_zero_is_full() {
        let m: MatK = Mat::zeros(3, 3);
        let b = nullspace(&m);
        assert_eq!(b.len(), 3);
    }

    #[test]
    fn inverse_round_trip() {
        let m: MatK = Mat::from_int_rows(&[&[1, 2, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = inverse(&m).unwrap();
        assert!(m.matmul(&inv).is_identity());
        assert!(inv.matmul(&m).is_identity());
    }

    #[test]
    fn singular_has_no_inverse() {
        let m: MatK = Mat::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert!(inverse(&m).is_none());
        assert_eq!(rank(&m), 1);
        assert_eq!(nullspace(&m).len(), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m: MatK = Mat::from_int_rows(&[&[1, 1], &[0, 1]]);
        let b = vec![FieldK::from_int(3), FieldK::from_int(1)];
        let x = solve(&m, &b).unwrap();
        assert_eq!(m.matvec(&x), b);

        let sing: MatK = Mat::from_int_rows(&[&[1, 1], &[1, 1]]);
        let bad = vec![FieldK::one(), FieldK::from_int(2)];
        assert!(solve(&sing, &bad).is_none());
    }
}
