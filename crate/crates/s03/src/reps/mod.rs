//! Representation families of the dual algebra and their exact checkers:
//! constant, z-parametrised and affine exchange relations, the two
//! coproducts, the X-matrix structure equations, fusion invariance and the
//! decomposition of the right regular action.

mod decompose;
mod families;
mod fusion;
mod rll;
mod zparam;

pub use decompose::{decompose_rra, rra_family_matrices, rra_families, DecompositionReport, RraFamily};
pub use families::{
    nxn_family, rep_block, rep_case_a, rep_case_b, rep_case_c, NxnFamily, RepError,
};
pub use fusion::{
    check_fusion_invariance, delta_l, evaluation_factorization, FactorizationReport,
};
pub use rll::{
    check_affine_entrywise, check_affine_rll, check_rll, check_rll_explicit,
    check_tilde_relations, constant_lift, evaluation_rep, Rep, SpectralRep,
};
pub use zparam::{
    coproduct_display_comparison, coproduct_matrices, fundamental_x_display_comparison,
    xmatrix_relation_classes, xmatrix_structure, CoproductVariant, EntryMismatch, ZLinearFamily,
};
