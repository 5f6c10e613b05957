//! Finitely presented algebra engines: the S03 quotient bialgebra with its
//! monomial normal form, coproduct and right regular action, and the dual
//! L̃-algebra rewriting system with its F/G basis.

mod dual;
mod quotient;

pub use dual::{
    verify_fg_action, DualElement, DualGenerator, DualWord, FgKind,
};
pub use quotient::{
    basis_words, coproduct, degree_dimension, normal_form, parse_word, rra_action, rra_matrix,
    word_string, Generator, Letter, S03Element, Sign, TensorElement, Word,
};
