//! Representations of the dual algebra and the exchange-relation checkers.
//!
//! A `Rep` stores the eight operator matrices π(L±_{ij}). The constant
//! checker verifies R⁺L₁L₂ = L₂L₁R⁺ for the three sign combinations on
//! aux ⊗ aux ⊗ carrier; the explicit checker verifies the same content as
//! the sixteen written-out quadratic relations plus the sixteen mixed ones
//! (with n̄ = 3−n, θ₁ = 1, θ₂ = −1). The affine checker works
//! coefficientwise in two spectral variables.

use crate::laurent::{to_inner, to_outer};
use crate::rmatrix::{r_plus, r_spectral_2var};
use crate::scalar::Ring;
use crate::{FieldK, Laurent2, LaurentK, Mat, Mat2, MatK, MatL};
use num_traits::{One, Zero};

pub(crate) fn gen_index(i: usize, j: usize) -> usize {
    debug_assert!((1..=2).contains(&i) && (1..=2).contains(&j));
    (i - 1) * 2 + (j - 1)
}

const THETA: [i64; 2] = [1, -1];

fn bar(n: usize) -> usize {
    3 - n
}

/// A finite-dimensional representation: eight matrices π(L±_{ij}).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rep {
    pub dim: usize,
    lp: [MatK; 4],
    lm: [MatK; 4],
}

impl Rep {
    pub fn new(lp: [MatK; 4], lm: [MatK; 4]) -> Self {
        let dim = lp[0].rows();
        for m in lp.iter().chain(lm.iter()) {
            assert!(m.is_square() && m.rows() == dim, "operator matrices must share one dimension");
        }
        Rep { dim, lp, lm }
    }

    pub fn plus(&self, i: usize, j: usize) -> &MatK {
        &self.lp[gen_index(i, j)]
    }

    pub fn minus(&self, i: usize, j: usize) -> &MatK {
        &self.lm[gen_index(i, j)]
    }

    pub fn l(&self, plus: bool, i: usize, j: usize) -> &MatK {
        if plus {
            self.plus(i, j)
        } else {
            self.minus(i, j)
        }
    }

    /// Tilde combination: L̃₁₁ = L₁₁+L₂₂, L̃₂₂ = L₁₁−L₂₂,
    /// L̃₁₂ = L₁₂+L₂₁, L̃₂₁ = L₁₂−L₂₁.
    pub fn tilde(&self, plus: bool, i: usize, j: usize) -> MatK {
        let l = if plus { &self.lp } else { &self.lm };
        match (i, j) {
            (1, 1) => l[gen_index(1, 1)].add(&l[gen_index(2, 2)]),
            (2, 2) => l[gen_index(1, 1)].sub(&l[gen_index(2, 2)]),
            (1, 2) => l[gen_index(1, 2)].add(&l[gen_index(2, 1)]),
            (2, 1) => l[gen_index(1, 2)].sub(&l[gen_index(2, 1)]),
            _ => panic!("indices must lie in {{1,2}}"),
        }
    }

    /// Build from tilde matrices (the inverse linear combination carries a
    /// factor 1/2, so tilde ∘ from_tilde is the identity).
    pub fn from_tilde(tp: [MatK; 4], tm: [MatK; 4]) -> Self {
        let half = FieldK::ratio(1, 2);
        let untild = |t: &[MatK; 4]| -> [MatK; 4] {
            let l11 = t[gen_index(1, 1)].add(&t[gen_index(2, 2)]).scaled(&half);
            let l22 = t[gen_index(1, 1)].sub(&t[gen_index(2, 2)]).scaled(&half);
            let l12 = t[gen_index(1, 2)].add(&t[gen_index(2, 1)]).scaled(&half);
            let l21 = t[gen_index(1, 2)].sub(&t[gen_index(2, 1)]).scaled(&half);
            [l11, l12, l21, l22]
        };
        Rep::new(untild(&tp), untild(&tm))
    }

    /// The two-dimensional fundamental representation π(L⁺) = R₂₁,
    /// π(L⁻) = R⁻¹, read as 2×2 blocks with the first tensor factor
    /// auxiliary.
    pub fn fundamental() -> Self {
        let p = crate::rmatrix::permutation();
        let r21 = p.matmul(&crate::rmatrix::r_const()).matmul(&p);
        let rinv = crate::rmatrix::r_minus();
        let block = |m: &MatK, i: usize, j: usize| -> MatK {
            Mat::from_fn(2, 2, |r, c| m[(2 * (i - 1) + r, 2 * (j - 1) + c)].clone())
        };
        let of = |m: &MatK| -> [MatK; 4] {
            [
                block(m, 1, 1),
                block(m, 1, 2),
                block(m, 2, 1),
                block(m, 2, 2),
            ]
        };
        Rep::new(of(&r21), of(&rinv))
    }

    pub fn generators(&self, plus: bool) -> &[MatK; 4] {
        if plus {
            &self.lp
        } else {
            &self.lm
        }
    }

    pub fn all_matrices(&self) -> Vec<MatK> {
        self.lp.iter().chain(self.lm.iter()).cloned().collect()
    }
}

fn unit_matrix(i: usize, j: usize) -> MatK {
    let mut e: MatK = Mat::zeros(2, 2);
    e[(i - 1, j - 1)] = FieldK::one();
    e
}

/// L acting on auxiliary slot 1 or 2 of aux⊗aux⊗carrier, as a 4d matrix.
fn big_l(mats: &[MatK; 4], slot: usize, d: usize) -> MatK {
    let id2: MatK = Mat::identity(2);
    let mut out: MatK = Mat::zeros(4 * d, 4 * d);
    for i in 1..=2 {
        for j in 1..=2 {
            let aux = match slot {
                1 => unit_matrix(i, j).kron(&id2),
                2 => id2.kron(&unit_matrix(i, j)),
                _ => unreachable!(),
            };
            out = out.add(&aux.kron(&mats[gen_index(i, j)]));
        }
    }
    out
}

/// Constant exchange relations R⁺L₁L₂ = L₂L₁R⁺ for (+,+), (−,−), (+,−).
pub fn check_rll(rep: &Rep) -> bool {
    let d = rep.dim;
    let rp = r_plus().kron(&Mat::identity(d));
    let pairs = [(true, true), (false, false), (true, false)];
    pairs.into_iter().all(|(s1, s2)| {
        let l1 = big_l(rep.generators(s1), 1, d);
        let l2 = big_l(rep.generators(s2), 2, d);
        rp.matmul(&l1).matmul(&l2) == l2.matmul(&l1).matmul(&rp)
    })
}

/// The same-sign relations written out: squares, commutator,
/// anticommutator and the four product identities, for each of L⁺ and L⁻.
fn check_same_sign_explicit(l: &[MatK; 4]) -> bool {
    let g = |i: usize, j: usize| &l[gen_index(i, j)];
    let sq = |m: &MatK| m.matmul(m);
    sq(g(1, 1)) == sq(g(2, 2))
        && g(1, 1).commutator(g(2, 2)).is_zero_matrix()
        && sq(g(1, 2)) == sq(g(2, 1)).map(|x| -x.clone())
        && g(1, 2).anticommutator(g(2, 1)).is_zero_matrix()
        && g(1, 1).matmul(g(1, 2)) == g(2, 2).matmul(g(2, 1))
        && g(1, 1).matmul(g(2, 1)) == g(2, 2).matmul(g(1, 2))
        && g(1, 2).matmul(g(1, 1)) == g(2, 1).matmul(g(2, 2)).map(|x| -x.clone())
        && g(1, 2).matmul(g(2, 2)) == g(2, 1).matmul(g(1, 1)).map(|x| -x.clone())
}

/// Mixed relations
/// L⁺_{ij}L⁻_{kl} − L⁻_{ij}L⁺_{kl} + θ_i L⁺_{īj}L⁻_{k̄l} + θ_j L⁻_{ij̄}L⁺_{kl̄} = 0.
fn check_mixed_explicit(rep: &Rep) -> bool {
    for i in 1..=2usize {
        for j in 1..=2usize {
            for k in 1..=2usize {
                for l in 1..=2usize {
                    let t1 = rep.plus(i, j).matmul(rep.minus(k, l));
                    let t2 = rep.minus(i, j).matmul(rep.plus(k, l));
                    let t3 = rep
                        .plus(bar(i), j)
                        .matmul(rep.minus(bar(k), l))
                        .scaled(&FieldK::from_int(THETA[i - 1]));
                    let t4 = rep
                        .minus(i, bar(j))
                        .matmul(rep.plus(k, bar(l)))
                        .scaled(&FieldK::from_int(THETA[j - 1]));
                    if !t1.sub(&t2).add(&t3).add(&t4).is_zero_matrix() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All 3×16 entry relations in explicit form.
pub fn check_rll_explicit(rep: &Rep) -> bool {
    check_same_sign_explicit(rep.generators(true))
        && check_same_sign_explicit(rep.generators(false))
        && check_mixed_explicit(rep)
}

/// The relations in the tilde basis: the eight vanishing products per sign
/// and the sixteen ordering rules between L̃⁻ and L̃⁺ — the same table the
/// dual rewriting engine uses, here as matrix identities.
pub fn check_tilde_relations(rep: &Rep) -> bool {
    let t = |plus: bool, i: usize, j: usize| rep.tilde(plus, i, j);
    // vanishing products within one sign
    for plus in [true, false] {
        let zero_pairs = [
            ((1, 1), (2, 2)),
            ((2, 2), (1, 1)),
            ((1, 2), (1, 2)),
            ((2, 1), (2, 1)),
            ((1, 1), (2, 1)),
            ((1, 2), (1, 1)),
            ((2, 1), (2, 2)),
            ((2, 2), (1, 2)),
        ];
        for ((a, b), (c, d)) in zero_pairs {
            if !t(plus, a, b).matmul(&t(plus, c, d)).is_zero_matrix() {
                return false;
            }
        }
    }
    // ordering rules L̃⁻_m·L̃⁺_t = ±L̃⁺_p·L̃⁻_q
    let rules: [((usize, usize), (usize, usize), i64, (usize, usize), (usize, usize)); 16] = [
        ((1, 1), (1, 1), 1, (1, 1), (1, 1)),
        ((2, 1), (1, 1), 1, (2, 1), (1, 1)),
        ((1, 1), (1, 2), 1, (1, 1), (1, 2)),
        ((2, 1), (1, 2), 1, (2, 1), (1, 2)),
        ((1, 1), (2, 1), 1, (2, 1), (2, 2)),
        ((2, 1), (2, 1), -1, (1, 1), (2, 2)),
        ((1, 1), (2, 2), 1, (2, 1), (2, 1)),
        ((2, 1), (2, 2), -1, (1, 1), (2, 1)),
        ((1, 2), (1, 1), -1, (2, 2), (1, 2)),
        ((2, 2), (1, 1), 1, (1, 2), (1, 2)),
        ((1, 2), (1, 2), -1, (2, 2), (1, 1)),
        ((2, 2), (1, 2), 1, (1, 2), (1, 1)),
        ((1, 2), (2, 1), 1, (1, 2), (2, 1)),
        ((2, 2), (2, 1), 1, (2, 2), (2, 1)),
        ((1, 2), (2, 2), 1, (1, 2), (2, 2)),
        ((2, 2), (2, 2), 1, (2, 2), (2, 2)),
    ];
    rules.into_iter().all(|(m, tt, sign, p, q)| {
        let lhs = t(false, m.0, m.1).matmul(&t(true, tt.0, tt.1));
        let rhs = t(true, p.0, p.1)
            .matmul(&t(false, q.0, q.1))
            .scaled(&FieldK::from_int(sign));
        lhs == rhs
    })
}

/// Spectral-parameter family of operator matrices L±_{ij}(x), Laurent in
/// s = x^(1/2).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectralRep {
    pub dim: usize,
    lp: [MatL; 4],
    lm: [MatL; 4],
}

impl SpectralRep {
    pub fn new(lp: [MatL; 4], lm: [MatL; 4]) -> Self {
        let dim = lp[0].rows();
        SpectralRep { dim, lp, lm }
    }

    pub fn generators(&self, plus: bool) -> &[MatL; 4] {
        if plus {
            &self.lp
        } else {
            &self.lm
        }
    }

    pub fn entry(&self, plus: bool, i: usize, j: usize) -> &MatL {
        &self.generators(plus)[gen_index(i, j)]
    }
}

/// Evaluation representation L⁺(x) = x⁻¹L⁺ + L⁻, L⁻(x) = L⁺ + x·L⁻,
/// with x = s².
pub fn evaluation_rep(rep: &Rep) -> SpectralRep {
    let lift = |m: &MatK, e: i64| -> MatL { m.map(|c| LaurentK::term(e, c.clone())) };
    let mk = |plus: bool| -> [MatL; 4] {
        let (first, second, e1, e2) = if plus {
            (rep.generators(true), rep.generators(false), -2i64, 0i64)
        } else {
            (rep.generators(true), rep.generators(false), 0i64, 2i64)
        };
        [0, 1, 2, 3].map(|k| lift(&first[k], e1).add(&lift(&second[k], e2)))
    };
    SpectralRep::new(mk(true), mk(false))
}

/// A constant representation viewed as a (trivially) spectral one.
pub fn constant_lift(rep: &Rep) -> SpectralRep {
    let lift = |m: &MatK| -> MatL { m.map(|c| LaurentK::constant(c.clone())) };
    SpectralRep::new(
        [0, 1, 2, 3].map(|k| lift(&rep.generators(true)[k])),
        [0, 1, 2, 3].map(|k| lift(&rep.generators(false)[k])),
    )
}

fn big_l_2var(mats: &[MatL; 4], slot: usize, d: usize, outer: bool) -> Mat2 {
    let id2: Mat2 = Mat::identity(2);
    let lift_entry = |p: &LaurentK| if outer { to_outer(p) } else { to_inner(p) };
    let mut out: Mat2 = Mat::zeros(4 * d, 4 * d);
    for i in 1..=2 {
        for j in 1..=2 {
            let aux2: Mat2 = unit_matrix(i, j).map(|c| Laurent2::constant(LaurentK::constant(c.clone())));
            let aux = match slot {
                1 => aux2.kron(&id2),
                2 => id2.kron(&aux2),
                _ => unreachable!(),
            };
            out = out.add(&aux.kron(&mats[gen_index(i, j)].map(&lift_entry)));
        }
    }
    out
}

/// Affine exchange relations R⁺(x₁/x₂)·L₁(x₁)·L₂(x₂) = L₂(x₂)·L₁(x₁)·R⁺(x₁/x₂)
/// for the three sign combinations, verified coefficientwise in the two
/// variables s = x₁^(1/2) and t = x₂^(1/2), together with the two
/// commutator identities
/// [L₁₂⁺(x₁), L₁₂⁻(x₂)] = [L₂₁⁺(x₁), L₂₁⁻(x₂)] and
/// [L₁₁⁺(x₁), L₁₁⁻(x₂)] + [L₂₂⁺(x₁), L₂₂⁻(x₂)] = 0.
pub fn check_affine_rll(rep: &SpectralRep) -> bool {
    let d = rep.dim;
    let p = crate::rmatrix::permutation().map(|c| Laurent2::constant(LaurentK::constant(c.clone())));
    // R⁺(x₁/x₂) = P·R(x₁/x₂)·P
    let rp = p
        .matmul(&r_spectral_2var(1, -1))
        .matmul(&p)
        .kron(&Mat::identity(d));
    let pairs = [(true, true), (false, false), (true, false)];
    let exchange_ok = pairs.into_iter().all(|(s1, s2)| {
        let l1 = big_l_2var(rep.generators(s1), 1, d, true);
        let l2 = big_l_2var(rep.generators(s2), 2, d, false);
        rp.matmul(&l1).matmul(&l2) == l2.matmul(&l1).matmul(&rp)
    });
    if !exchange_ok {
        return false;
    }
    let ent = |plus: bool, i: usize, j: usize, outer: bool| -> Mat2 {
        rep.entry(plus, i, j)
            .map(|q| if outer { to_outer(q) } else { to_inner(q) })
    };
    let comm = |i: usize, j: usize| -> Mat2 {
        ent(true, i, j, true).commutator(&ent(false, i, j, false))
    };
    comm(1, 2) == comm(2, 1) && comm(1, 1).add(&comm(2, 2)).is_zero_matrix()
}

/// The affine relations written entrywise:
/// (x₁+x₂)(L_{ab}(x₁)L_{cd}(x₂) − L_{ab}(x₂)L_{cd}(x₁))
///   + θ_a(x₂−x₁)·L_{āb}(x₁)L_{c̄d}(x₂) + θ_b(x₂−x₁)·L_{ab̄}(x₁)L_{cd̄}(x₂) = 0,
/// with the first factor taken from L^{s1} and the second from L^{s2} for
/// the three sign combinations (the mixed case swaps the signs together
/// with the arguments in the antisymmetrised term).
pub fn check_affine_entrywise(rep: &SpectralRep) -> bool {
    let d = rep.dim;
    let x1 = Laurent2::term(2, LaurentK::one());
    let x2 = Laurent2::constant(LaurentK::term(2, FieldK::one()));
    let sum = x1.clone() + x2.clone();
    let diff = x2.clone() - x1.clone();
    let at = |plus: bool, i: usize, j: usize, outer: bool| -> Mat2 {
        rep.entry(plus, i, j)
            .map(|q| if outer { to_outer(q) } else { to_inner(q) })
    };
    let scale = |m: &Mat2, c: &Laurent2| -> Mat2 { m.map(|e| e.clone() * c.clone()) };
    for (s1, s2) in [(true, true), (false, false), (true, false)] {
        for a in 1..=2usize {
            for b in 1..=2usize {
                for c in 1..=2usize {
                    for e in 1..=2usize {
                        let t1 = at(s1, a, b, true).matmul(&at(s2, c, e, false));
                        // swapped arguments: first factor at x₂, second at x₁,
                        // and in the mixed case also swapped signs
                        let t2 = at(s2, a, b, false).matmul(&at(s1, c, e, true));
                        let t3 = at(s1, bar(a), b, true).matmul(&at(s2, bar(c), e, false));
                        let t4 = at(s1, a, bar(b), true).matmul(&at(s2, c, bar(e), false));
                        let lhs = scale(&t1.sub(&t2), &sum)
                            .add(&scale(&t3, &(diff.clone() * Laurent2::from_int(THETA[a - 1]))))
                            .add(&scale(&t4, &(diff.clone() * Laurent2::from_int(THETA[b - 1]))));
                        if !lhs.is_zero_matrix() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_matches_block_reading() {
        let f = Rep::fundamental();
        // π(L±) equal the degree-one right-regular-action matrices up to
        // the overall 1/√2 of the R-matrix
        let scale = FieldK::sqrt2();
        use crate::algebra::{rra_matrix, Generator, Sign};
        for (plus, sign) in [(true, Sign::Plus), (false, Sign::Minus)] {
            for i in 1..=2usize {
                for j in 1..=2usize {
                    let big = rra_matrix(Generator::new(sign, i as u8, j as u8), 1);
                    let block = Mat::from_fn(2, 2, |r, c| big[(r, c)].clone());
                    assert_eq!(rep_block_scaled(&f, plus, i, j, &scale), block);
                }
            }
        }
    }

    fn rep_block_scaled(rep: &Rep, plus: bool, i: usize, j: usize, s: &FieldK) -> MatK {
        rep.l(plus, i, j).scaled(s)
    }

    #[test]
    fn fundamental_satisfies_all_relation_forms() {
        let f = Rep::fundamental();
        assert!(check_rll(&f));
        assert!(check_rll_explicit(&f));
        assert!(check_tilde_relations(&f));
    }

    #[test]
    fn random_matrices_fail_rll() {
        let bad = Rep::new(
            [
                Mat::from_int_rows(&[&[1, 2], &[3, 4]]),
                Mat::from_int_rows(&[&[0, 1], &[1, 1]]),
                Mat::from_int_rows(&[&[2, 0], &[1, 1]]),
                Mat::from_int_rows(&[&[1, 1], &[0, 2]]),
            ],
            [
                Mat::from_int_rows(&[&[1, 0], &[2, 1]]),
                Mat::from_int_rows(&[&[1, 1], &[1, 0]]),
                Mat::from_int_rows(&[&[0, 2], &[1, 1]]),
                Mat::from_int_rows(&[&[3, 1], &[1, 1]]),
            ],
        );
        assert!(!check_rll(&bad));
        assert!(!check_rll_explicit(&bad));
    }

    #[test]
    fn explicit_and_matrix_forms_agree_on_fundamental_scalings() {
        // scaling L⁺ and L⁻ independently preserves every relation; both
        // checkers must agree
        let f = Rep::fundamental();
        let scaled = Rep::new(
            [0, 1, 2, 3].map(|k| f.generators(true)[k].scaled(&FieldK::from_int(3))),
            [0, 1, 2, 3].map(|k| f.generators(false)[k].scaled(&FieldK::ratio(1, 5))),
        );
        assert!(check_rll(&scaled));
        assert!(check_rll_explicit(&scaled));
    }

    #[test]
    fn tilde_round_trip() {
        let f = Rep::fundamental();
        let tp = [(1, 1), (1, 2), (2, 1), (2, 2)].map(|(i, j)| f.tilde(true, i, j));
        let tm = [(1, 1), (1, 2), (2, 1), (2, 2)].map(|(i, j)| f.tilde(false, i, j));
        let back = Rep::from_tilde(tp, tm);
        assert_eq!(back, f);
        // applying the raw tilde map twice doubles: (L̃)~₁₁ = 2·L₁₁
        let twice = back.tilde(true, 1, 1).add(&back.tilde(true, 2, 2));
        assert_eq!(twice, f.plus(1, 1).scaled(&FieldK::from_int(2)));
    }

    #[test]
    fn evaluation_rep_of_fundamental_is_affine() {
        let srep = evaluation_rep(&Rep::fundamental());
        assert!(check_affine_rll(&srep));
        assert!(check_affine_entrywise(&srep));
    }

    #[test]
    fn constant_lift_reduces_to_constant_relations() {
        let srep = constant_lift(&Rep::fundamental());
        assert!(check_affine_rll(&srep));
    }

    #[test]
    fn evaluation_of_non_rep_fails() {
        let bad = Rep::new(
            [
                Mat::from_int_rows(&[&[1, 2], &[3, 4]]),
                Mat::from_int_rows(&[&[0, 1], &[1, 1]]),
                Mat::from_int_rows(&[&[2, 0], &[1, 1]]),
                Mat::from_int_rows(&[&[1, 1], &[0, 2]]),
            ],
            [
                Mat::from_int_rows(&[&[1, 0], &[2, 1]]),
                Mat::from_int_rows(&[&[1, 1], &[1, 0]]),
                Mat::from_int_rows(&[&[0, 2], &[1, 1]]),
                Mat::from_int_rows(&[&[3, 1], &[1, 1]]),
            ],
        );
        assert!(!check_affine_rll(&evaluation_rep(&bad)));
    }
}
