//! Ideal operations reduced to elimination: intersection, colon,
//! saturation, kernels of algebra maps and largest homogeneous subideals.
//!
//! Ideals of a quotient ring are handled as lifted ideals containing the
//! modulus. When [`Budget::check_posts`](crate::groebner::Budget::check_posts)
//! is set, each operation re-verifies its containment postconditions by
//! membership tests and reports a violation as an error.

mod elimination;
mod homogeneous;
mod kernel;

pub use elimination::{eliminate, intersect, quotient, saturate};
pub use homogeneous::largest_homogeneous_subideal;
pub use kernel::{algebra_map_kernel, AlgebraMap};
