//! The S03 R-matrix family and its exact identities.
//!
//! Houses the constant matrices R, R⁺ = PRP, R⁻ = R⁻¹, the permutation P,
//! the braid matrix R̂ = PR, the spectral (Baxterised) matrices
//! R(x) = x^(-1/2)·R + x^(1/2)·R₂₁⁻¹ and R̂(x) = P·R(x), the alternative
//! z-parametrisation of the braid matrix, the diagonaliser M and the
//! spectral projectors of R̂(x).
//!
//! Leg numbering: an operator with subscript 12 acts on factors (1,2) of a
//! tensor product with factor 1 leftmost and major in the combined index;
//! X₂₁ = P·X·P.

use crate::laurent::{to_inner, to_outer};
use crate::linalg::{inverse, rank};
use crate::{FieldK, Laurent2, LaurentK, Mat, Mat2, MatK, MatL};
use num_traits::{One, Zero};
use std::fmt;

/// The permutation (flip) matrix on C²⊗C².
pub fn permutation() -> MatK {
    Mat::from_int_rows(&[
        &[1, 0, 0, 0],
        &[0, 0, 1, 0],
        &[0, 1, 0, 0],
        &[0, 0, 0, 1],
    ])
}

fn scaled_int(rows: &[&[i64]], scale: FieldK) -> MatK {
    let m: MatK = Mat::from_int_rows(rows);
    m.scaled(&scale)
}

/// The constant S03 R-matrix (prefactor 1/√2 included).
pub fn r_const() -> MatK {
    scaled_int(
        &[
            &[1, 0, 0, 1],
            &[0, 1, 1, 0],
            &[0, 1, -1, 0],
            &[-1, 0, 0, 1],
        ],
        FieldK::inv_sqrt2(),
    )
}

/// R⁺ = P·R·P.
pub fn r_plus() -> MatK {
    let p = permutation();
    p.matmul(&r_const()).matmul(&p)
}

/// R⁻ = R⁻¹.
pub fn r_minus() -> MatK {
    inverse(&r_const()).expect("R is invertible")
}

/// Braid matrix R̂ = P·R.
pub fn rhat() -> MatK {
    permutation().matmul(&r_const())
}

/// R̂⁻¹.
pub fn rhat_inv() -> MatK {
    inverse(&rhat()).expect("braid matrix is invertible")
}

/// The diagonaliser M of the braid matrix (unitary up to nothing: M·M† = 1).
pub fn diagonaliser() -> MatK {
    let i = FieldK::i();
    let one = FieldK::one();
    let z = FieldK::zero();
    Mat::from_rows(vec![
        vec![one.clone(), z.clone(), z.clone(), i.clone()],
        vec![z.clone(), one.clone(), -i.clone(), z.clone()],
        vec![z.clone(), -i.clone(), one.clone(), z.clone()],
        vec![i.clone(), z.clone(), z.clone(), one.clone()],
    ])
    .scaled(&FieldK::inv_sqrt2())
}

/// Generic spectral matrix in several half-power variables: returns
/// R(arg) with arg^(1/2) = s^es · t^et as a two-variable Laurent matrix.
/// `(es, et) = (1, 0)` gives R(x), `(0, 1)` gives R(y), `(1, 1)` gives R(xy)
/// and `(1, -1)` gives R(x/y).
pub fn r_spectral_2var(es: i64, et: i64) -> Mat2 {
    // R(x) = x^(-1/2)·R + x^(1/2)·R₂₁⁻¹
    let p = permutation();
    let r21_inv = p
        .matmul(&r_minus())
        .matmul(&p);
    let half = |m: &MatK, sexp: i64, texp: i64| -> Mat2 {
        m.map(|c| Laurent2::term(sexp, LaurentK::term(texp, c.clone())))
    };
    let a = half(&r_const(), -es, -et);
    let b = half(&r21_inv, es, et);
    a.add(&b)
}

fn collapse_to_single(m: &Mat2) -> MatL {
    m.map(|p| {
        let mut out = LaurentK::new();
        for (e, c) in p.terms() {
            for (e2, c2) in c.terms() {
                debug_assert_eq!(*e2, 0);
                out.add_term(*e, c2.clone());
            }
        }
        out
    })
}

/// The Baxterised R(x) as a Laurent-polynomial matrix in s = x^(1/2).
pub fn r_spectral() -> MatL {
    collapse_to_single(&r_spectral_2var(1, 0))
}

/// The Baxterised braid matrix R̂(x) = P·R(x).
pub fn rhat_spectral() -> MatL {
    let p = permutation().map(|c| LaurentK::constant(c.clone()));
    p.matmul(&r_spectral())
}

/// All constant and spectral members of the family in one place.
pub struct RFamily {
    pub r: MatK,
    pub rplus: MatK,
    pub rminus: MatK,
    pub p: MatK,
    pub rhat: MatK,
    pub m: MatK,
    pub rx: MatL,
    pub rhatx: MatL,
}

impl RFamily {
    pub fn new() -> Self {
        let fam = RFamily {
            r: r_const(),
            rplus: r_plus(),
            rminus: r_minus(),
            p: permutation(),
            rhat: rhat(),
            m: diagonaliser(),
            rx: r_spectral(),
            rhatx: rhat_spectral(),
        };
        debug_assert_eq!(fam.rplus, fam.p.matmul(&fam.r).matmul(&fam.p));
        debug_assert_eq!(fam.rhat, fam.p.matmul(&fam.r));
        fam
    }
}

impl Default for RFamily {
    fn default() -> Self {
        Self::new()
    }
}

/// Lift a 4×4 matrix to legs (1,2), (2,3) or (1,3) of a three-fold tensor
/// product of C².
pub fn on_legs<T: crate::Ring>(m: &Mat<T>, legs: (usize, usize)) -> Mat<T> {
    let id2: Mat<T> = Mat::identity(2);
    match legs {
        (1, 2) => m.kron(&id2),
        (2, 3) => id2.kron(m),
        (1, 3) => {
            let p23 = {
                let p: Mat<T> = Mat::from_int_rows(&[
                    &[1, 0, 0, 0],
                    &[0, 0, 1, 0],
                    &[0, 1, 0, 0],
                    &[0, 0, 0, 1],
                ]);
                id2.kron(&p)
            };
            let m12 = m.kron(&id2);
            p23.matmul(&m12).matmul(&p23)
        }
        _ => panic!("unsupported leg pair {legs:?}"),
    }
}

/// Constant Yang–Baxter equation R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂ on (C²)⊗³.
pub fn check_constant_ybe(r: &MatK) -> bool {
    assert_eq!((r.rows(), r.cols()), (4, 4));
    let r12 = on_legs(r, (1, 2));
    let r13 = on_legs(r, (1, 3));
    let r23 = on_legs(r, (2, 3));
    let lhs = r12.matmul(&r13).matmul(&r23);
    let rhs = r23.matmul(&r13).matmul(&r12);
    lhs == rhs
}

/// Spectral Yang–Baxter equation R₁₂(x)·R₁₃(xy)·R₂₃(y) = R₂₃(y)·R₁₃(xy)·R₁₂(x),
/// verified coefficientwise as a two-variable Laurent-polynomial identity in
/// s = x^(1/2) and t = y^(1/2) — not sampled.
pub fn check_spectral_ybe() -> bool {
    let rx = on_legs(&r_spectral_2var(1, 0), (1, 2));
    let rxy = on_legs(&r_spectral_2var(1, 1), (1, 3));
    let ry = on_legs(&r_spectral_2var(0, 1), (2, 3));
    let lhs = rx.matmul(&rxy).matmul(&ry);
    let rhs = ry.matmul(&rxy).matmul(&rx);
    lhs == rhs
}

/// Both constant braid identities: R̂ + R̂⁻¹ = √2·I and R̂² + R̂⁻² = 0.
pub fn check_braid_identities() -> bool {
    let rh = rhat();
    let rh_inv = rhat_inv();
    let id: MatK = Mat::identity(4);
    let sum_ok = rh.add(&rh_inv) == id.scaled(&FieldK::sqrt2());
    let sq = rh.matmul(&rh);
    let sq_inv = rh_inv.matmul(&rh_inv);
    let square_ok = sq.add(&sq_inv).is_zero_matrix();
    sum_ok && square_ok
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZComposeError {
    /// 1 − z·z′ = 0 away from the convention corners.
    SingularDenominator,
}

impl fmt::Display for ZComposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "singular composition: 1 - z*z' = 0 outside the corner convention")
    }
}

impl std::error::Error for ZComposeError {}

/// Composition law z″ = (z − z′)/(1 − z·z′) of the z-parametrisation, with
/// the convention z″ = 1 at the singular corners z = z′ = ±1.
pub fn z_compose(z: &FieldK, zp: &FieldK) -> Result<FieldK, ZComposeError> {
    let one = FieldK::one();
    let denom = one.clone() - z.clone() * zp.clone();
    if denom.is_zero() {
        let pm = |w: &FieldK| w.is_one() || (-w.clone()).is_one();
        if pm(z) && pm(zp) {
            return Ok(one);
        }
        return Err(ZComposeError::SingularDenominator);
    }
    Ok((z.clone() - zp.clone()) * denom.inverse().unwrap())
}

/// Unnormalised z-parametrised braid matrix (1+z)·R̂ + (1−z)·R̂⁻¹; the
/// dropped prefactor is (2(1+z²))^(−1/2), which lies outside Q(i,√2) for
/// generic z. At z = ±1 the prefactor is 1/2 and the normalised value is
/// R̂^(±1).
pub struct ZBraid;

impl ZBraid {
    /// Entries polynomial in z (the Laurent variable is z here, with only
    /// non-negative exponents).
    pub fn symbolic() -> MatL {
        let one_plus = LaurentK::from_terms([(0, FieldK::one()), (1, FieldK::one())]);
        let one_minus = LaurentK::from_terms([(0, FieldK::one()), (1, -FieldK::one())]);
        let a = rhat().map(|c| one_plus.clone().scaled(c));
        let b = rhat_inv().map(|c| one_minus.clone().scaled(c));
        a.add(&b)
    }

    pub fn at(z: &FieldK) -> MatK {
        let one = FieldK::one();
        let a = rhat().scaled(&(one.clone() + z.clone()));
        let b = rhat_inv().scaled(&(one - z.clone()));
        a.add(&b)
    }

    /// 2(1+z²), the square of the dropped normalisation.
    pub fn norm_squared_at(z: &FieldK) -> FieldK {
        FieldK::from_int(2) * (FieldK::one() + z.clone() * z.clone())
    }
}

/// Braid exchange relation of the z-parametrisation at exact points:
/// R̂₁₂(z″)·R̂₂₃(z)·R̂₁₂(z′) = R̂₂₃(z′)·R̂₁₂(z)·R̂₂₃(z″), checked on the
/// unnormalised matrices (each side carries the same three prefactors).
pub fn check_z_braid_relation(z: &FieldK, zp: &FieldK) -> Result<bool, ZComposeError> {
    let zpp = z_compose(z, zp)?;
    let m_zpp = ZBraid::at(&zpp);
    let m_z = ZBraid::at(z);
    let m_zp = ZBraid::at(zp);
    let lhs = on_legs(&m_zpp, (1, 2))
        .matmul(&on_legs(&m_z, (2, 3)))
        .matmul(&on_legs(&m_zp, (1, 2)));
    let rhs = on_legs(&m_zp, (2, 3))
        .matmul(&on_legs(&m_z, (1, 2)))
        .matmul(&on_legs(&m_zpp, (2, 3)));
    Ok(lhs == rhs)
}

/// The same braid relation as a two-variable polynomial identity in (z, z′),
/// with the denominator 1 − zz′ cleared: the factor carrying z″ is replaced
/// by (1−zz′+z−z′)·R̂ + (1−zz′−z+z′)·R̂⁻¹ on both sides.
pub fn check_z_braid_polynomial() -> bool {
    // outer variable = z, inner = z′
    let z = Laurent2::term(1, LaurentK::one());
    let zp = Laurent2::constant(LaurentK::var());
    let one = Laurent2::one();
    let lift = |m: &MatK| -> Mat2 { m.map(|c| Laurent2::constant(LaurentK::constant(c.clone()))) };
    let rh = lift(&rhat());
    let rh_inv = lift(&rhat_inv());
    let poly_braid = |plus: &Laurent2, minus: &Laurent2| -> Mat2 {
        rh.map(|e| e.clone() * plus.clone())
            .add(&rh_inv.map(|e| e.clone() * minus.clone()))
    };
    let zzp = z.clone() * zp.clone();
    // cleared z″ factor
    let cleared = poly_braid(
        &(one.clone() - zzp.clone() + z.clone() - zp.clone()),
        &(one.clone() - zzp.clone() - z.clone() + zp.clone()),
    );
    let braid_z = poly_braid(&(one.clone() + z.clone()), &(one.clone() - z.clone()));
    let braid_zp = poly_braid(&(one.clone() + zp.clone()), &(one.clone() - zp.clone()));
    let lhs = on_legs(&cleared, (1, 2))
        .matmul(&on_legs(&braid_z, (2, 3)))
        .matmul(&on_legs(&braid_zp, (1, 2)));
    let rhs = on_legs(&braid_zp, (2, 3))
        .matmul(&on_legs(&braid_z, (1, 2)))
        .matmul(&on_legs(&cleared, (2, 3)));
    lhs == rhs
}

/// The two eigenvalues of R̂(x) as Laurent polynomials in s:
/// μ₁(x) = (1+i)(x−i)/√(2x) and μ₂(x) = (1+i)(1−ix)/√(2x).
pub fn rhat_eigenvalues() -> (LaurentK, LaurentK) {
    let pre = FieldK::inv_sqrt2() * (FieldK::one() + FieldK::i());
    let mu1 = LaurentK::from_terms([(1, pre.clone()), (-1, -FieldK::i() * pre.clone())]);
    let mu2 = LaurentK::from_terms([(-1, pre.clone()), (1, -FieldK::i() * pre)]);
    (mu1, mu2)
}

/// Diagonalisation of the spectral braid matrix: returns (M, D) with
/// M·R̂(x)·M⁻¹ = D = ((1+i)/√(2x))·diag(x−i, x−i, 1−ix, 1−ix),
/// holding coefficientwise in s. At x = 1 the diagonal is √2·I, matching
/// R̂(1) = √2·I.
pub fn diagonalize_rhat() -> (MatK, MatL) {
    let (mu1, mu2) = rhat_eigenvalues();
    let mut d: MatL = Mat::zeros(4, 4);
    d[(0, 0)] = mu1.clone();
    d[(1, 1)] = mu1;
    d[(2, 2)] = mu2.clone();
    d[(3, 3)] = mu2;
    (diagonaliser(), d)
}

/// Coefficientwise check of the diagonalisation identity.
pub fn check_diagonalisation() -> bool {
    let (m, d) = diagonalize_rhat();
    let m_inv = inverse(&m).expect("M invertible");
    let lift = |a: &MatK| a.map(|c| LaurentK::constant(c.clone()));
    let conj = lift(&m).matmul(&rhat_spectral()).matmul(&lift(&m_inv));
    conj == d
}

/// Spectral projectors Π⁽¹⁾, Π⁽²⁾ of R̂(x), built at an exact rational point;
/// their x-independence is certified by rebuilding at a second point.
pub fn fusion_projectors() -> (MatK, MatK) {
    let p1 = projectors_at(&FieldK::from_int(2));
    let p2 = projectors_at(&FieldK::from_int(3));
    assert_eq!(p1, p2, "spectral projectors must not depend on x");
    p1
}

/// Π⁽¹⁾ = (R̂(x)−μ₂)/(μ₁−μ₂) and Π⁽²⁾ = (R̂(x)−μ₁)/(μ₂−μ₁) at s = s0.
pub fn projectors_at(s0: &FieldK) -> (MatK, MatK) {
    let (mu1, mu2) = rhat_eigenvalues();
    let m1 = mu1.eval(s0).unwrap();
    let m2 = mu2.eval(s0).unwrap();
    let rhx = rhat_spectral().map(|p| p.eval(s0).unwrap());
    let id: MatK = Mat::identity(4);
    let diff_inv = (m1.clone() - m2.clone()).inverse().expect("distinct eigenvalues");
    let pi1 = rhx.sub(&id.scaled(&m2)).scaled(&diff_inv);
    let pi2 = rhx.sub(&id.scaled(&m1)).scaled(&(-diff_inv));
    (pi1, pi2)
}

/// Idempotence, completeness and rank of the fusion projectors.
pub fn check_fusion_projectors() -> bool {
    let (p1, p2) = fusion_projectors();
    let id: MatK = Mat::identity(4);
    p1.matmul(&p1) == p1
        && p2.matmul(&p2) == p2
        && p1.add(&p2) == id
        && rank(&p1) == 2
        && rank(&p2) == 2
}

/// Lift a single-variable spectral matrix into the two-variable ring, with
/// its variable mapped to the outer (s) or inner (t) slot.
pub fn lift_outer(m: &MatL) -> Mat2 {
    m.map(to_outer)
}

pub fn lift_inner(m: &MatL) -> Mat2 {
    m.map(to_inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::charpoly;

    /// Reference entries (×√2) of the constant family.
    #[test]
    fn golden_matrices() {
        let s2 = FieldK::sqrt2();
        let fam = RFamily::new();
        assert_eq!(
            fam.r.scaled(&s2),
            Mat::from_int_rows(&[
                &[1, 0, 0, 1],
                &[0, 1, 1, 0],
                &[0, 1, -1, 0],
                &[-1, 0, 0, 1]
            ])
        );
        assert_eq!(
            fam.rplus.scaled(&s2),
            Mat::from_int_rows(&[
                &[1, 0, 0, 1],
                &[0, -1, 1, 0],
                &[0, 1, 1, 0],
                &[-1, 0, 0, 1]
            ])
        );
        assert_eq!(
            fam.rminus.scaled(&s2),
            Mat::from_int_rows(&[
                &[1, 0, 0, -1],
                &[0, 1, 1, 0],
                &[0, 1, -1, 0],
                &[1, 0, 0, 1]
            ])
        );
        assert_eq!(
            fam.rhat.scaled(&s2),
            Mat::from_int_rows(&[
                &[1, 0, 0, 1],
                &[0, 1, -1, 0],
                &[0, 1, 1, 0],
                &[-1, 0, 0, 1]
            ])
        );
        // M entries (×√2)
        let i = FieldK::i();
        let m2 = fam.m.scaled(&s2);
        assert_eq!(m2[(0, 3)], i);
        assert_eq!(m2[(1, 2)], -i.clone());
        assert_eq!(m2[(2, 1)], -i.clone());
        assert_eq!(m2[(3, 0)], i);
        // M is unitary
        assert!(fam.m.matmul(&fam.m.dagger()).is_identity());
    }

    #[test]
    fn spectral_matrix_entries() {
        // √(2x)·R(x) has the reference pattern in u = x
        let rx = r_spectral();
        let s2 = LaurentK::term(1, FieldK::sqrt2());
        let bare = rx.map(|p| p.clone() * s2.clone());
        let up1 = LaurentK::from_terms([(2, FieldK::one()), (0, FieldK::one())]);
        let um1 = LaurentK::from_terms([(2, FieldK::one()), (0, -FieldK::one())]);
        assert_eq!(bare[(0, 0)], up1);
        assert_eq!(bare[(0, 3)], -um1.clone());
        assert_eq!(bare[(1, 1)], -um1.clone());
        assert_eq!(bare[(1, 2)], up1);
        assert_eq!(bare[(2, 1)], LaurentK::from_terms([(2, FieldK::one()), (0, FieldK::one())]));
        assert_eq!(bare[(2, 2)], um1.clone());
        assert_eq!(bare[(3, 0)], um1);
        // R(1) = √2·P
        let r1 = rx.map(|p| p.eval(&FieldK::one()).unwrap());
        assert_eq!(r1, permutation().scaled(&FieldK::sqrt2()));
    }

    #[test]
    fn constant_ybe_holds_and_detects_perturbation() {
        assert!(check_constant_ybe(&r_const()));
        assert!(check_constant_ybe(&Mat::identity(4)));
        let mut bad = r_const();
        bad[(0, 3)] = -bad[(0, 3)].clone();
        assert!(!check_constant_ybe(&bad));
    }

    #[test]
    fn spectral_ybe_two_variable() {
        assert!(check_spectral_ybe());
    }

    #[test]
    fn spectral_ybe_specialises_at_one() {
        // at x = y = 1 both sides are products of √2·P on the legs
        let r1 = r_spectral().map(|p| p.eval(&FieldK::one()).unwrap());
        assert_eq!(r1, permutation().scaled(&FieldK::sqrt2()));
        let p12 = on_legs(&r1, (1, 2));
        let p13 = on_legs(&r1, (1, 3));
        let p23 = on_legs(&r1, (2, 3));
        assert_eq!(
            p12.matmul(&p13).matmul(&p23),
            p23.matmul(&p13).matmul(&p12)
        );
    }

    #[test]
    fn braid_identities_and_eigenvalues() {
        assert!(check_braid_identities());
        // eigenvalues of R̂ are (1±i)/√2, each twice
        let lam1 = FieldK::inv_sqrt2() * (FieldK::one() + FieldK::i());
        let lam2 = FieldK::inv_sqrt2() * (FieldK::one() - FieldK::i());
        let expected = crate::CharPoly::from_roots(&[
            lam1.clone(),
            lam1,
            lam2.clone(),
            lam2,
        ]);
        assert_eq!(charpoly(&rhat()), expected);
        // kernel of (R̂ − μ1·I) is two-dimensional
        let (mu1, _) = rhat_eigenvalues();
        let mu1_at_1 = mu1.eval(&FieldK::one()).unwrap();
        // at s = 1, R̂(1) = √2 I is degenerate; use the constant braid matrix
        // eigenvalue (1+i)/√2 instead
        let _ = mu1_at_1;
        let lam = FieldK::inv_sqrt2() * (FieldK::one() + FieldK::i());
        let shifted = rhat().sub(&MatK::identity(4).scaled(&lam));
        assert_eq!(crate::linalg::nullspace(&shifted).len(), 2);
    }

    #[test]
    fn z_compose_cases() {
        let z = FieldK::ratio(1, 3);
        // (z, 0) → z
        assert_eq!(z_compose(&z, &FieldK::zero()).unwrap(), z);
        // (z, z) → 0
        assert_eq!(z_compose(&z, &z).unwrap(), FieldK::zero());
        // (1, −1) → 1
        assert_eq!(
            z_compose(&FieldK::one(), &FieldK::from_int(-1)).unwrap(),
            FieldK::one()
        );
        // singular corners use the convention
        assert_eq!(z_compose(&FieldK::one(), &FieldK::one()).unwrap(), FieldK::one());
        // singular away from the corners is an error
        assert!(z_compose(&FieldK::from_int(2), &FieldK::ratio(1, 2)).is_err());
    }

    #[test]
    fn z_braid_relation_samples() {
        assert!(check_z_braid_relation(&FieldK::ratio(1, 2), &FieldK::ratio(1, 3)).unwrap());
        assert!(check_z_braid_relation(&FieldK::one(), &FieldK::from_int(-1)).unwrap());
        assert!(check_z_braid_relation(&FieldK::zero(), &FieldK::zero()).unwrap());
    }

    #[test]
    fn z_braid_polynomial_identity() {
        assert!(check_z_braid_polynomial());
    }

    #[test]
    fn zbraid_endpoints() {
        // normalised value at z = ±1 is R̂^{±1}; prefactor there is 1/2
        let half = FieldK::ratio(1, 2);
        assert_eq!(ZBraid::at(&FieldK::one()).scaled(&half), rhat());
        assert_eq!(ZBraid::at(&FieldK::from_int(-1)).scaled(&half), rhat_inv());
        assert_eq!(ZBraid::norm_squared_at(&FieldK::one()), FieldK::from_int(4));
        // symbolic form evaluates consistently
        let sym = ZBraid::symbolic();
        let at_half = sym.map(|p| p.eval(&FieldK::ratio(1, 2)).unwrap());
        assert_eq!(at_half, ZBraid::at(&FieldK::ratio(1, 2)));
    }

    #[test]
    fn zbraid_matches_reference_pattern() {
        // (1+z)R̂ + (1−z)R̂⁻¹ = √2·[[1,0,0,z],[0,1,−z,0],[0,z,1,0],[−z,0,0,1]]
        let z = FieldK::ratio(2, 7);
        let got = ZBraid::at(&z);
        let mut expected: MatK = Mat::identity(4);
        expected[(0, 3)] = z.clone();
        expected[(1, 2)] = -z.clone();
        expected[(2, 1)] = z.clone();
        expected[(3, 0)] = -z.clone();
        assert_eq!(got, expected.scaled(&FieldK::sqrt2()));
    }

    #[test]
    fn diagonalisation_holds_coefficientwise() {
        assert!(check_diagonalisation());
        // at x = 1 the diagonal must be √2·I
        let (_, d) = diagonalize_rhat();
        let d1 = d.map(|p| p.eval(&FieldK::one()).unwrap());
        assert_eq!(d1, MatK::identity(4).scaled(&FieldK::sqrt2()));
    }

    #[test]
    fn projectors() {
        assert!(check_fusion_projectors());
        let (p1, p2) = fusion_projectors();
        // spectral decomposition reassembles R̂(x) at any sample point
        let s0 = FieldK::ratio(5, 3);
        let (mu1, mu2) = rhat_eigenvalues();
        let lhs = rhat_spectral().map(|p| p.eval(&s0).unwrap());
        let rhs = p1
            .scaled(&mu1.eval(&s0).unwrap())
            .add(&p2.scaled(&mu2.eval(&s0).unwrap()));
        assert_eq!(lhs, rhs);
    }
}
