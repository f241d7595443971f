use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::format;

use super::integer::Integer;
use crate::{Error, Result};

/// Largest prime below 2^16, used for fast modular verification.
pub const DEFAULT_PRIME: u64 = 65521;

/// Residue class modulo an odd prime.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    /// The class of `value` modulo `modulus`. The modulus is not checked for
    /// primality here; use [`PrimeField::new`](super::PrimeField::new) for that.
    pub fn new(value: i64, modulus: u64) -> Self {
        let residue = (value as i128).rem_euclid(modulus as i128) as u64;
        PrimeFieldElement { residue, modulus }
    }

    pub fn from_integer(value: &Integer, modulus: u64) -> Self {
        PrimeFieldElement { residue: value.rem_euclid_u64(modulus), modulus }
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(self) -> i64 {
        if self.residue > self.modulus / 2 {
            -((self.modulus - self.residue) as i64)
        } else {
            self.residue as i64
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inverse(self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::NotInvertible(format!("0 mod {}", self.modulus)));
        }
        let (mut r0, mut r1) = (self.modulus as i128, self.residue as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        if r0 != 1 {
            return Err(Error::NotInvertible(format!("{} mod {}", self.residue, self.modulus)));
        }
        let residue = s0.rem_euclid(self.modulus as i128) as u64;
        Ok(PrimeFieldElement { residue, modulus: self.modulus })
    }

    fn with(self, residue: u64) -> Self {
        PrimeFieldElement { residue, modulus: self.modulus }
    }
}

/// Inverse of a nonzero prime-field element.
pub fn prime_inverse(x: PrimeFieldElement) -> Result<PrimeFieldElement> {
    x.inverse()
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let s = self.residue as u128 + rhs.residue as u128;
        self.with((s % self.modulus as u128) as u64)
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        if self.residue >= rhs.residue {
            self.with(self.residue - rhs.residue)
        } else {
            self.with(self.modulus - (rhs.residue - self.residue))
        }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let p = self.residue as u128 * rhs.residue as u128;
        self.with((p % self.modulus as u128) as u64)
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        if self.residue == 0 {
            self
        } else {
            self.with(self.modulus - self.residue)
        }
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl fmt::Debug for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
