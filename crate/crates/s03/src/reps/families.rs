//! Constructed representation families: the three two-dimensional cases,
//! the block representation of arbitrary dimension N₁+N₂, and the
//! z-linear n×n family.

use super::rll::{gen_index, Rep};
use crate::scalar::Field;
use crate::{FieldK, Mat, MatK};
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    /// Case A needs both highest-weight eigenvalues λ⁺, λ⁻ nonzero.
    CaseANeedsNonzeroEigenvalues,
    /// Case B needs λ⁺ ≠ 0 and an invertible spectral parameter x.
    CaseBNeedsNonzeroLambda,
    /// Case C needs b ≠ 0 and the compatibility a⁺·ℓ⁻₁₂ = a⁻·ℓ⁺₁₂.
    CaseCConstraintViolated,
    /// Block representation needs pairwise distinct diagonal values.
    BlockRepeatedDiagonal,
    /// Off-diagonal blocks must be supported on the allowed rectangles.
    BlockBadSupport,
    DimensionMismatch,
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            RepError::CaseANeedsNonzeroEigenvalues => {
                "case A requires nonzero eigenvalues lambda+ and lambda-"
            }
            RepError::CaseBNeedsNonzeroLambda => {
                "case B requires lambda+ != 0 and x != 0"
            }
            RepError::CaseCConstraintViolated => {
                "case C requires b != 0 and a+*l12- = a-*l12+"
            }
            RepError::BlockRepeatedDiagonal => {
                "block representation requires pairwise distinct diagonal entries"
            }
            RepError::BlockBadSupport => {
                "off-diagonal blocks must vanish outside the allowed rectangles"
            }
            RepError::DimensionMismatch => "dimension mismatch",
        };
        write!(f, "{msg}")
    }
}

impl std::error::Error for RepError {}

fn two_by_two(entries: [[FieldK; 2]; 2]) -> MatK {
    Mat::from_rows(entries.into_iter().map(|r| r.to_vec()).collect())
}

fn z() -> FieldK {
    FieldK::zero()
}

/// Two-dimensional case A: common eigenvector with λ⁺, λ⁻ ≠ 0; the minus
/// tilde matrices are the plus ones scaled by λ⁻/λ⁺.
pub fn rep_case_a(
    lambda_p: &FieldK,
    lambda_m: &FieldK,
    x: &FieldK,
    mu_p: &FieldK,
) -> Result<Rep, RepError> {
    if lambda_p.is_zero() || lambda_m.is_zero() {
        return Err(RepError::CaseANeedsNonzeroEigenvalues);
    }
    let tp = [
        two_by_two([[lambda_p.clone(), z()], [z(), z()]]),
        two_by_two([[z(), x.clone()], [z(), z()]]),
        two_by_two([[z(), z()], [x.clone(), z()]]),
        two_by_two([[z(), z()], [z(), mu_p.clone()]]),
    ];
    let ratio = lambda_m.clone() * lambda_p.inverse().unwrap();
    let tm = [
        tp[0].scaled(&ratio),
        tp[1].scaled(&ratio),
        tp[2].scaled(&ratio),
        tp[3].scaled(&ratio),
    ];
    Ok(Rep::from_tilde(tp, tm))
}

/// Two-dimensional case B (particular class with λ⁺ ≠ 0, λ⁻ = 0); μ is the
/// free eigenvalue of L̃⁻₁₁ on the second basis vector.
pub fn rep_case_b(lambda_p: &FieldK, mu: &FieldK, x: &FieldK) -> Result<Rep, RepError> {
    if lambda_p.is_zero() || x.is_zero() {
        return Err(RepError::CaseBNeedsNonzeroLambda);
    }
    let xl = x.clone() * lambda_p.clone();
    let x_inv = x.inverse().unwrap();
    let tp = [
        two_by_two([[lambda_p.clone(), z()], [z(), z()]]),
        two_by_two([[z(), xl.clone()], [z(), z()]]),
        two_by_two([[z(), z()], [xl, z()]]),
        two_by_two([[z(), z()], [z(), -lambda_p.clone()]]),
    ];
    let xm = x_inv * mu.clone();
    let tm = [
        two_by_two([[z(), z()], [z(), mu.clone()]]),
        two_by_two([[z(), z()], [xm.clone(), z()]]),
        two_by_two([[z(), -xm], [z(), z()]]),
        two_by_two([[mu.clone(), z()], [z(), z()]]),
    ];
    Ok(Rep::from_tilde(tp, tm))
}

/// Two-dimensional case C: L̃±₁₁ = L̃±₂₂ = 0, nilpotent L̃±₁₂ and rank-one
/// L̃±₂₁ = a±·[[1, b], [−1/b, −1]], subject to a⁺ℓ⁻₁₂ = a⁻ℓ⁺₁₂.
pub fn rep_case_c(
    a_p: &FieldK,
    a_m: &FieldK,
    l12_p: &FieldK,
    l12_m: &FieldK,
    b: &FieldK,
) -> Result<Rep, RepError> {
    if b.is_zero() || a_p.clone() * l12_m.clone() != a_m.clone() * l12_p.clone() {
        return Err(RepError::CaseCConstraintViolated);
    }
    let b_inv = b.inverse().unwrap();
    let one = FieldK::from_int(1);
    let t21 = two_by_two([[one.clone(), b.clone()], [-b_inv, -one]]);
    let mk = |a: &FieldK, l12: &FieldK| -> [MatK; 4] {
        [
            Mat::zeros(2, 2),
            two_by_two([[z(), l12.clone()], [z(), z()]]),
            t21.scaled(a),
            Mat::zeros(2, 2),
        ]
    };
    Ok(Rep::from_tilde(mk(a_p, l12_p), mk(a_m, l12_m)))
}

/// Block representation of dimension N₁+N₂ (in the tilde basis, with
/// L̃⁻ = L̃⁺): L̃₁₁ diagonal on the first block, L̃₂₂ on the second,
/// L̃₁₂ supported on the (1..N₁)×(N₁+1..N₁+N₂) rectangle and L̃₂₁ on its
/// transpose.
pub fn rep_block(
    rho: &[FieldK],
    lambda: &[FieldK],
    block12: &MatK,
    block21: &MatK,
) -> Result<Rep, RepError> {
    let (n1, n2) = (rho.len(), lambda.len());
    let d = n1 + n2;
    if block12.rows() != n1 || block12.cols() != n2 || block21.rows() != n2 || block21.cols() != n1
    {
        return Err(RepError::DimensionMismatch);
    }
    let distinct = |v: &[FieldK]| {
        for i in 0..v.len() {
            for j in 0..i {
                if v[i] == v[j] {
                    return false;
                }
            }
        }
        true
    };
    if !distinct(rho) || !distinct(lambda) {
        return Err(RepError::BlockRepeatedDiagonal);
    }
    let mut t11: MatK = Mat::zeros(d, d);
    for (k, r) in rho.iter().enumerate() {
        t11[(k, k)] = r.clone();
    }
    let mut t22: MatK = Mat::zeros(d, d);
    for (k, l) in lambda.iter().enumerate() {
        t22[(n1 + k, n1 + k)] = l.clone();
    }
    let mut t12: MatK = Mat::zeros(d, d);
    for i in 0..n1 {
        for j in 0..n2 {
            t12[(i, n1 + j)] = block12[(i, j)].clone();
        }
    }
    let mut t21: MatK = Mat::zeros(d, d);
    for i in 0..n2 {
        for j in 0..n1 {
            t21[(n1 + i, j)] = block21[(i, j)].clone();
        }
    }
    let tp = [t11, t12, t21, t22];
    let tm = tp.clone();
    Ok(Rep::from_tilde(tp, tm))
}

/// The z-linear n×n family: L₁₁(z) = (1+kz)·diag(a_m),
/// L₂₂(z) = ε(1+kz)·diag((−1)^(m−1)·a_m), L₁₂(z) = (1+kz)·(super u, sub v),
/// L₂₁(z) = ε(1+kz)·(alternating-sign super u, sub v). The z-independent
/// parts are returned; the scalar factor (1+kz) is restored by `at`.
#[derive(Clone, Debug)]
pub struct NxnFamily {
    pub n: usize,
    pub k: FieldK,
    lhat: [MatK; 4],
}

/// Build the family; `u` has length n−1 (superdiagonal at rows 1..n−1) and
/// `v` has length n−1 (subdiagonal at rows 2..n).
pub fn nxn_family(
    n: usize,
    a: &[FieldK],
    u: &[FieldK],
    v: &[FieldK],
    k: &FieldK,
    eps: i64,
) -> Result<NxnFamily, RepError> {
    if n < 2 || a.len() != n || u.len() != n - 1 || v.len() != n - 1 {
        return Err(RepError::DimensionMismatch);
    }
    assert!(eps == 1 || eps == -1);
    let e = FieldK::from_int(eps);
    let mut l11: MatK = Mat::zeros(n, n);
    let mut l22: MatK = Mat::zeros(n, n);
    for m in 0..n {
        l11[(m, m)] = a[m].clone();
        let sign = if m % 2 == 0 { 1 } else { -1 };
        l22[(m, m)] = e.clone() * FieldK::from_int(sign) * a[m].clone();
    }
    let mut l12: MatK = Mat::zeros(n, n);
    let mut l21: MatK = Mat::zeros(n, n);
    for m in 0..n - 1 {
        // row m+1 (1-based m+1), superdiagonal entry u_m
        l12[(m, m + 1)] = u[m].clone();
        // (−1)^(m+1) with m 1-based: for row index m (0-based), 1-based is m+1
        let s_sup = if (m + 1) % 2 == 0 { 1 } else { -1 }; // (−1)^{(m+1)+1}
        l21[(m, m + 1)] = e.clone() * FieldK::from_int(s_sup) * u[m].clone();
    }
    for m in 1..n {
        // subdiagonal entry v_m at 1-based row m+1
        l12[(m, m - 1)] = v[m - 1].clone();
        let s_sub = if (m + 1) % 2 == 0 { -1 } else { 1 }; // (−1)^{(m+1)−1}
        l21[(m, m - 1)] = e.clone() * FieldK::from_int(s_sub) * v[m - 1].clone();
    }
    Ok(NxnFamily {
        n,
        k: k.clone(),
        lhat: [l11, l12, l21, l22],
    })
}

impl NxnFamily {
    pub fn lhat(&self) -> &[MatK; 4] {
        &self.lhat
    }

    /// L_{ij}(z) = (1+kz)·L̂_{ij}.
    pub fn at(&self, zv: &FieldK) -> [MatK; 4] {
        let scale = FieldK::from_int(1) + self.k.clone() * zv.clone();
        [0, 1, 2, 3].map(|i| self.lhat[i].scaled(&scale))
    }

    /// Direct exchange-relation check at exact points:
    /// R̂(z″)·L₂(z)·L₁(z′) = L₂(z′)·L₁(z)·R̂(z″), on the unnormalised
    /// z-parametrised braid matrix.
    pub fn check_exchange_at(&self, zv: &FieldK, zp: &FieldK) -> Result<bool, crate::rmatrix::ZComposeError> {
        let zpp = crate::rmatrix::z_compose(zv, zp)?;
        let rb = crate::rmatrix::ZBraid::at(&zpp).kron(&Mat::identity(self.n));
        let l_z = self.at(zv);
        let l_zp = self.at(zp);
        let big = |mats: &[MatK; 4], slot: usize| -> MatK {
            let id2: MatK = Mat::identity(2);
            let mut out: MatK = Mat::zeros(4 * self.n, 4 * self.n);
            for i in 1..=2usize {
                for j in 1..=2usize {
                    let mut e: MatK = Mat::zeros(2, 2);
                    e[(i - 1, j - 1)] = FieldK::from_int(1);
                    let aux = if slot == 1 { e.kron(&id2) } else { id2.kron(&e) };
                    out = out.add(&aux.kron(&mats[gen_index(i, j)]));
                }
            }
            out
        };
        let lhs = rb.matmul(&big(&l_z, 2)).matmul(&big(&l_zp, 1));
        let rhs = big(&l_zp, 2).matmul(&big(&l_z, 1)).matmul(&rb);
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::rll::{check_rll, check_tilde_relations};
    use crate::reps::zparam::ZLinearFamily;
    use crate::linalg::commutant_dimension;
    use num_traits::One;

    #[test]
    fn case_a_passes_rll_and_scaling() {
        let rep = rep_case_a(
            &FieldK::one(),
            &FieldK::from_int(2),
            &FieldK::one(),
            &FieldK::one(),
        )
        .unwrap();
        assert!(check_rll(&rep));
        assert!(check_tilde_relations(&rep));
        // L̃⁻ = (λ⁻/λ⁺)·L̃⁺ entrywise
        let ratio = FieldK::from_int(2);
        for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            assert_eq!(rep.tilde(false, i, j), rep.tilde(true, i, j).scaled(&ratio));
        }
    }

    #[test]
    fn case_a_equal_eigenvalues_gives_equal_tildes() {
        let rep = rep_case_a(
            &FieldK::one(),
            &FieldK::one(),
            &FieldK::one(),
            &FieldK::one(),
        )
        .unwrap();
        for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            assert_eq!(rep.tilde(false, i, j), rep.tilde(true, i, j));
        }
    }

    #[test]
    fn case_a_rejects_zero_eigenvalue() {
        assert_eq!(
            rep_case_a(&FieldK::zero(), &FieldK::one(), &FieldK::one(), &FieldK::one()),
            Err(RepError::CaseANeedsNonzeroEigenvalues)
        );
    }

    #[test]
    fn case_b_matrices_and_rll() {
        let rep = rep_case_b(&FieldK::one(), &FieldK::one(), &FieldK::one()).unwrap();
        assert!(check_rll(&rep));
        assert!(check_tilde_relations(&rep));
        // exact tilde matrices at (λ⁺, μ, x) = (1, 1, 1)
        let e = |entries: &[&[i64]]| -> MatK { Mat::from_int_rows(entries) };
        assert_eq!(rep.tilde(true, 1, 1), e(&[&[1, 0], &[0, 0]]));
        assert_eq!(rep.tilde(true, 1, 2), e(&[&[0, 1], &[0, 0]]));
        assert_eq!(rep.tilde(true, 2, 1), e(&[&[0, 0], &[1, 0]]));
        assert_eq!(rep.tilde(true, 2, 2), e(&[&[0, 0], &[0, -1]]));
        assert_eq!(rep.tilde(false, 1, 1), e(&[&[0, 0], &[0, 1]]));
        assert_eq!(rep.tilde(false, 1, 2), e(&[&[0, 0], &[1, 0]]));
        assert_eq!(rep.tilde(false, 2, 1), e(&[&[0, -1], &[0, 0]]));
        assert_eq!(rep.tilde(false, 2, 2), e(&[&[1, 0], &[0, 0]]));
        // the supplementary relations of the particular class:
        // L̃⁺₁₂L̃⁺₂₁ = −x⁻¹(L̃⁺₁₁)², L̃⁺₂₁L̃⁺₁₂ = −x⁻¹(L̃⁺₂₂)²
        let x_inv = FieldK::one();
        let t = |i, j| rep.tilde(true, i, j);
        assert_eq!(
            t(1, 2).matmul(&t(2, 1)),
            t(1, 1).matmul(&t(1, 1)).scaled(&-x_inv.clone())
        );
        assert_eq!(
            t(2, 1).matmul(&t(1, 2)),
            t(2, 2).matmul(&t(2, 2)).scaled(&-x_inv)
        );
    }

    #[test]
    fn case_c_passes_rll() {
        let one = FieldK::one();
        let rep = rep_case_c(&one, &one, &one, &one, &one).unwrap();
        assert!(check_rll(&rep));
        assert!(check_tilde_relations(&rep));
    }

    #[test]
    fn case_c_constraint_enforced() {
        let one = FieldK::one();
        assert!(rep_case_c(&one, &one, &one, &FieldK::from_int(2), &one).is_err());
        assert!(rep_case_c(&one, &one, &one, &one, &FieldK::zero()).is_err());
    }

    #[test]
    fn block_rep_small_cases() {
        // N1 = N2 = 1 reduces to a 2-dim case
        let b12: MatK = Mat::from_int_rows(&[&[1]]);
        let b21: MatK = Mat::from_int_rows(&[&[1]]);
        let rep = rep_block(&[FieldK::one()], &[FieldK::from_int(3)], &b12, &b21).unwrap();
        assert_eq!(rep.dim, 2);
        assert!(check_rll(&rep));
        assert!(check_tilde_relations(&rep));

        // N1 = 2, N2 = 1, dense blocks: irreducible
        let b12: MatK = Mat::from_int_rows(&[&[1], &[1]]);
        let b21: MatK = Mat::from_int_rows(&[&[1, 1]]);
        let rep = rep_block(
            &[FieldK::one(), FieldK::from_int(2)],
            &[FieldK::from_int(3)],
            &b12,
            &b21,
        )
        .unwrap();
        assert!(check_rll(&rep));
        assert!(check_tilde_relations(&rep));
        let tilde_mats: Vec<MatK> = [(1, 1), (1, 2), (2, 1), (2, 2)]
            .map(|(i, j)| rep.tilde(true, i, j))
            .to_vec();
        assert_eq!(commutant_dimension(&tilde_mats).unwrap(), 1);

        // zero off-diagonal blocks: reducible
        let z12: MatK = Mat::zeros(2, 1);
        let z21: MatK = Mat::zeros(1, 2);
        let red = rep_block(
            &[FieldK::one(), FieldK::from_int(2)],
            &[FieldK::from_int(3)],
            &z12,
            &z21,
        )
        .unwrap();
        let mats: Vec<MatK> = [(1, 1), (1, 2), (2, 1), (2, 2)]
            .map(|(i, j)| red.tilde(true, i, j))
            .to_vec();
        assert!(commutant_dimension(&mats).unwrap() >= 2);
    }

    #[test]
    fn block_rep_rejects_repeated_diagonal() {
        let b12: MatK = Mat::from_int_rows(&[&[1], &[1]]);
        let b21: MatK = Mat::from_int_rows(&[&[1, 1]]);
        assert_eq!(
            rep_block(&[FieldK::one(), FieldK::one()], &[FieldK::from_int(3)], &b12, &b21),
            Err(RepError::BlockRepeatedDiagonal)
        );
    }

    #[test]
    fn nxn_three_matches_reference_pattern() {
        // the 3×3 family with (a,b,c) diagonal and (d,e,f,g) off-diagonal
        let a = [FieldK::from_int(2), FieldK::from_int(3), FieldK::from_int(5)];
        let u = [FieldK::from_int(7), FieldK::from_int(11)];
        let v = [FieldK::from_int(13), FieldK::from_int(17)];
        let fam = nxn_family(3, &a, &u, &v, &FieldK::one(), 1).unwrap();
        let [l11, l12, l21, l22] = fam.lhat().clone();
        assert_eq!(l11, Mat::from_int_rows(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]));
        assert_eq!(l22, Mat::from_int_rows(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 5]]));
        assert_eq!(l12, Mat::from_int_rows(&[&[0, 7, 0], &[13, 0, 11], &[0, 17, 0]]));
        assert_eq!(l21, Mat::from_int_rows(&[&[0, 7, 0], &[-13, 0, -11], &[0, 17, 0]]));
    }

    #[test]
    fn nxn_ansatz_and_exchange() {
        // generic 3×3 family satisfies the structure equations
        let a = [FieldK::from_int(2), FieldK::from_int(3), FieldK::from_int(5)];
        let u = [FieldK::from_int(7), FieldK::from_int(11)];
        let v = [FieldK::from_int(13), FieldK::from_int(17)];
        for eps in [1, -1] {
            let fam = nxn_family(3, &a, &u, &v, &FieldK::from_int(2), eps).unwrap();
            let zfam = ZLinearFamily::from_ansatz(fam.lhat(), &fam.k);
            assert!(zfam.check_ansatz_structure());
            assert!(fam
                .check_exchange_at(&FieldK::ratio(1, 2), &FieldK::ratio(1, 3))
                .unwrap());
        }
        // n = 2 sample from the same family
        let fam = nxn_family(
            2,
            &[FieldK::one(), FieldK::one()],
            &[FieldK::one()],
            &[FieldK::zero()],
            &FieldK::one(),
            1,
        )
        .unwrap();
        assert!(fam
            .check_exchange_at(&FieldK::ratio(1, 2), &FieldK::ratio(1, 3))
            .unwrap());
        // k = 0 degenerates to constant commutation with the braid matrix
        let fam0 = nxn_family(
            2,
            &[FieldK::one(), FieldK::from_int(2)],
            &[FieldK::one()],
            &[FieldK::one()],
            &FieldK::zero(),
            1,
        )
        .unwrap();
        assert!(fam0
            .check_exchange_at(&FieldK::ratio(2, 5), &FieldK::ratio(1, 7))
            .unwrap());
    }
}
