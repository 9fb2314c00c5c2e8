//! The KL transforms on polynomials, the families `Pₙ`, `P̃ₙ`, `P̂ₙ` and the
//! relations between them.

mod central;
mod family;
mod gf;
mod moments;
mod operator;
mod relations;
mod table;
mod transform;

pub use crate::exact::apply_a;
pub use central::{central_difference, central_factorial_poly};
pub use family::{
    combine, expand_monomial, family, family_row_json, make_family, p_hat, Family, Route,
};
pub use gf::gf_coefficient_check;
pub use moments::{canonical_moments, determinant, dual_moment, hankel_determinant};
pub use operator::{lemma_kl_a_power, operator_power_identity, OperatorParity};
pub use relations::{
    connect_ptilde_to_p, connect_xp_to_ptilde, genocchi_weight_even, genocchi_weight_odd,
    structure_next, x_times_family,
};
pub use table::{table1_csv, table1_json, table1_text, table_style};
pub use transform::{kl_forward, kl_inverse, kl_monomial, KLKind};
