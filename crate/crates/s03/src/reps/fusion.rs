//! Fusion: the spectral projectors of the braid matrix commute with the
//! coproduct image of the fundamental representation, so its tensor square
//! splits along the braid eigenspaces; on each component the plus and
//! minus generators are proportional and the evaluation family loses its
//! spectral dependence up to a scalar.

use super::rll::{gen_index, Rep};
use crate::rmatrix::fusion_projectors;
use crate::scalar::Field;
use crate::{FieldK, LaurentK, Mat, MatK, MatL};
use num_traits::Zero;

/// The eight matrices (π⊗π)δ(L±_{ij}) = Σ_k π(L±_{ik}) ⊗ π(L±_{kj}) on the
/// tensor square of the carrier.
pub fn delta_l(rep: &Rep) -> ([MatK; 4], [MatK; 4]) {
    let of = |l: &[MatK; 4]| -> [MatK; 4] {
        let e = |i: usize, j: usize| &l[gen_index(i, j)];
        let d = |i: usize, j: usize| e(i, 1).kron(e(1, j)).add(&e(i, 2).kron(e(2, j)));
        [d(1, 1), d(1, 2), d(2, 1), d(2, 2)]
    };
    (of(rep.generators(true)), of(rep.generators(false)))
}

/// True iff both fusion projectors commute with all eight coproduct images
/// of the fundamental representation.
pub fn check_fusion_invariance() -> bool {
    let (p1, p2) = fusion_projectors();
    let (dp, dm) = delta_l(&Rep::fundamental());
    dp.iter()
        .chain(dm.iter())
        .all(|m| p1.commutator(m).is_zero_matrix() && p2.commutator(m).is_zero_matrix())
}

/// Scalars and identities of the x-factorisation on the tensor square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    /// ratio δL⁻ = c·δL⁺ on each projector block
    pub block_ratios: [FieldK; 2],
    /// every evaluation generator is a Laurent scalar times a constant
    /// operator on each block
    pub factorises: bool,
}

/// On each fusion block the minus coproduct images are a fixed multiple of
/// the plus ones, so L±(x) = (x^(-1)+c)·δL⁺ resp. (1+c·x)·δL⁺ there: the
/// spectral dependence factorises out completely.
pub fn evaluation_factorization() -> Option<FactorizationReport> {
    let (p1, p2) = fusion_projectors();
    let (dp, dm) = delta_l(&Rep::fundamental());
    let mut ratios = Vec::new();
    for proj in [&p1, &p2] {
        let mut ratio: Option<FieldK> = None;
        for k in 0..4 {
            let plus = dp[k].matmul(proj);
            let minus = dm[k].matmul(proj);
            // find the proportionality constant from the first nonzero entry
            for r in 0..plus.rows() {
                for c in 0..plus.cols() {
                    if !plus[(r, c)].is_zero() {
                        let q = minus[(r, c)].clone() * plus[(r, c)].inverse().unwrap();
                        match &ratio {
                            None => ratio = Some(q),
                            Some(prev) => {
                                if *prev != q {
                                    return None;
                                }
                            }
                        }
                    }
                }
            }
            let q = ratio.clone()?;
            if minus != plus.scaled(&q) {
                return None;
            }
        }
        ratios.push(ratio?);
    }
    // verify the evaluation family on each block is scalar × constant:
    // (x⁻¹·δL⁺ + δL⁻)·Π = (x⁻¹ + c)·δL⁺·Π as a Laurent identity
    let mut factorises = true;
    for (proj, c) in [(&p1, &ratios[0]), (&p2, &ratios[1])] {
        for k in 0..4 {
            let base = dp[k].matmul(proj);
            let lift = |m: &MatK, e: i64| -> MatL { m.map(|v| LaurentK::term(e, v.clone())) };
            let plus_eval = lift(&base, -2).add(&lift(&base.scaled(c), 0));
            let direct = lift(&dp[k].matmul(proj), -2).add(&lift(&dm[k].matmul(proj), 0));
            if plus_eval != direct {
                factorises = false;
            }
            // L⁻(x)·Π = x·L⁺(x)·Π comes along for free; check the shape too
            let minus_eval = lift(&base, 0).add(&lift(&base.scaled(c), 2));
            let direct_minus = lift(&dp[k].matmul(proj), 0).add(&lift(&dm[k].matmul(proj), 2));
            if minus_eval != direct_minus {
                factorises = false;
            }
        }
    }
    Some(FactorizationReport {
        block_ratios: [ratios[0].clone(), ratios[1].clone()],
        factorises,
    })
}
