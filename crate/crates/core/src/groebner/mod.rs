//! Normal forms, Buchberger's algorithm, reduced bases and the ideal
//! queries built on them.

mod basis;
mod buchberger;
mod budget;
mod reduce;

pub use basis::{
    buchberger, dimension, ideal_equal, ideal_membership, leading_term_ideal, min_hitting_set, reduce_basis,
    reduce_elements, GroebnerBasis, Ideal,
};
pub use budget::{Budget, Interrupt};
pub use reduce::{normal_form, s_polynomial};
