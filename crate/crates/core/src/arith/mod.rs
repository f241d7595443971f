//! Exact coefficient arithmetic.

mod integer;
mod prime;
mod rational;

use alloc::format;
use alloc::string::String;
use core::fmt::Debug;
use core::hash::Hash;

pub use integer::{int_gcd, Integer, ParseIntegerError};
pub use prime::{is_prime, prime_inverse, PrimeFieldElement, DEFAULT_PRIME};
pub use rational::{rat_normalize, Rational};

use crate::{Error, Result};

/// A coefficient field, used as a domain object: the field value performs
/// the arithmetic on its elements.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Image of a rational number; fails when the denominator is not invertible.
    fn from_rational(&self, q: &Rational) -> Result<Self::Elem>;
    /// Canonical rational representative (the symmetric residue for prime fields).
    fn to_rational(&self, a: &Self::Elem) -> Rational;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Short identifier: `q` or `fp:P`.
    fn name(&self) -> String;
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RationalField;

impl Field for RationalField {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::ZERO
    }
    fn one(&self) -> Rational {
        Rational::ONE
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::from(v)
    }
    fn from_rational(&self, q: &Rational) -> Result<Rational> {
        Ok(q.clone())
    }
    fn to_rational(&self, a: &Rational) -> Rational {
        a.clone()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn inv(&self, a: &Rational) -> Result<Rational> {
        a.inv()
    }
    fn name(&self) -> String {
        String::from("q")
    }
}

/// The field with `p` elements, `p` an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus == 2 || !is_prime(modulus) {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(PrimeField { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn element(&self, v: i64) -> PrimeFieldElement {
        PrimeFieldElement::new(v, self.modulus)
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { modulus: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElement;

    fn zero(&self) -> PrimeFieldElement {
        self.element(0)
    }
    fn one(&self) -> PrimeFieldElement {
        self.element(1)
    }
    fn from_i64(&self, v: i64) -> PrimeFieldElement {
        self.element(v)
    }
    fn from_rational(&self, q: &Rational) -> Result<PrimeFieldElement> {
        let n = PrimeFieldElement::from_integer(q.numer(), self.modulus);
        let d = PrimeFieldElement::from_integer(q.denom(), self.modulus);
        if d.is_zero() {
            return Err(Error::NotInvertible(format!("denominator of {q} mod {}", self.modulus)));
        }
        Ok(n * d.inverse()?)
    }
    fn to_rational(&self, a: &PrimeFieldElement) -> Rational {
        Rational::from(a.symmetric())
    }
    fn is_zero(&self, a: &PrimeFieldElement) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &PrimeFieldElement) -> bool {
        a.residue() == 1
    }
    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        *a + *b
    }
    fn sub(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        *a - *b
    }
    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        *a * *b
    }
    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        -*a
    }
    fn inv(&self, a: &PrimeFieldElement) -> Result<PrimeFieldElement> {
        a.inverse()
    }
    fn name(&self) -> String {
        format!("fp:{}", self.modulus)
    }
}
