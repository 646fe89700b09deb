//! The algebra generated by `d_-`, `d_+`, `T_i`, `y_i` acting on `V_* = (V_k)_k`.

mod canonical;
mod nalpha;
mod ops;
mod relations;
mod vk;
mod twisted;
mod words;

pub use ops::{
    apply_word, commutator_minus_plus, d_minus, d_plus, d_plus_star, delta_op, delta_star_monomial, delta_star_op,
    t_inv_op, t_op, y_op, z_op, Op,
};
pub use vk::{VkElement, YExp};
pub use nalpha::{d_alpha_operator, n_alpha, y_alpha, y_alpha_by_recursion};
pub use words::{chi0_via_word, chi_via_word};
pub use canonical::{b_lambda, canonical_expand, canonical_reconstruct, involution_n, CanonicalTerm};
pub use twisted::{spanning_set, twisted_product};
pub use relations::{d_word_elements, relation_check, relation_check_on, test_elements, RelationOutcome, Suite};
