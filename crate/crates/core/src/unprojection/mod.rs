//! The generic Type III family and the checks run against it.
//!
//! The unprojection ring is never built from fractions: it is represented
//! by its presentation over the ambient ring with `T_i` standing for
//! `z_i / z_1`. The kernel of `φ` therefore needs only a saturation by
//! `z_1`, no elimination of target variables.

mod certificate;
mod checks;
mod family;

pub use certificate::{polynomial_ring_certificate, residual_ideal, Certificate};
pub use checks::{phi_map, psi_map, verify_all_sequential, verify_claim, CheckId, CheckOutcome, CheckStatus};
pub use family::{a_name, build_generic_family, ClaimedIdeals, UnprojectionFamily};
