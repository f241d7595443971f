//! Rings, monomial orders, sparse polynomials and polynomial matrices.

mod matrix;
mod monomial;
mod order;
mod polynomial;
mod ring;

pub use matrix::{determinant, PolyMatrix};
pub use monomial::{Exponent, Monomial};
pub use order::{monomial_compare, Block, MonomialOrder, OrderKind};
pub use polynomial::{homogenize, poly_arith, weighted_components, PolyOp, Polynomial, Term};
pub use ring::{is_valid_name, make_ring, Ring, RingContext};

pub(crate) use polynomial::{same_ring, sub_mul_merge};
