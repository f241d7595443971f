//! Exact ideal arithmetic over polynomial rings, and the generic Type III
//! unprojection family built on top of it.
//!
//! The crate is `no_std` and needs only `alloc`. Everything that touches the
//! outside world (text formats, clocks, threads, the command line) lives in
//! the companion `unproj` crate.
//!
//! Layering, bottom to top:
//!
//! * [`arith`]: arbitrary-precision integers, normalized rationals, prime
//!   fields, and the [`Field`](arith::Field) abstraction polynomials use.
//! * [`poly`]: rings, monomial orders, sparse polynomials, matrices.
//! * [`groebner`]: normal forms, Buchberger, reduced bases, dimension.
//! * [`ideal_ops`]: intersection, colon, saturation, elimination, kernels of
//!   algebra maps and the largest weighted-homogeneous subideal.
//! * [`unprojection`]: the generic family for a given `n` and the named
//!   verification checks.
#![no_std]

extern crate alloc;

pub mod arith;
mod error;
pub mod groebner;
pub mod ideal_ops;
pub mod poly;
pub mod unprojection;

pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
