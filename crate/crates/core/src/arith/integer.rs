use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision integer.
///
/// Values that fit in an `i64` are stored inline; only larger magnitudes
/// allocate. The representation is canonical, so derived equality and
/// hashing are value-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Integer(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64),
    Big(BigInt),
}

impl Integer {
    pub const ZERO: Integer = Integer(Repr::Small(0));
    pub const ONE: Integer = Integer(Repr::Small(1));

    pub fn from_i128(v: i128) -> Self {
        match i64::try_from(v) {
            Ok(s) => Integer(Repr::Small(s)),
            Err(_) => Integer(Repr::Big(BigInt::from(v))),
        }
    }

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(s) => Integer(Repr::Small(s)),
            None => Integer(Repr::Big(b)),
        }
    }

    fn to_big(&self) -> BigInt {
        match &self.0 {
            Repr::Small(s) => BigInt::from(*s),
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self.0 {
            Repr::Small(s) => Some(s),
            Repr::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(s) => *s < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(s) => s.signum() as i32,
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Integer {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Nonnegative greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Integer) -> Integer {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => {
                let g = gcd_u64(a.unsigned_abs(), b.unsigned_abs());
                Integer::from_i128(g as i128)
            }
            _ => Integer::from_big(self.to_big().gcd(&other.to_big())),
        }
    }

    /// Truncating division with remainder, like Rust's `/` and `%`.
    ///
    /// Panics on division by zero.
    pub fn div_rem(&self, d: &Integer) -> (Integer, Integer) {
        assert!(!d.is_zero(), "integer division by zero");
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &d.0) {
            if let (Some(q), Some(r)) = (a.checked_div(*b), a.checked_rem(*b)) {
                return (Integer(Repr::Small(q)), Integer(Repr::Small(r)));
            }
        }
        let (q, r) = self.to_big().div_rem(&d.to_big());
        (Integer::from_big(q), Integer::from_big(r))
    }

    /// Quotient of a division known to be exact.
    pub fn div_exact(&self, d: &Integer) -> Integer {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "div_exact with nonzero remainder");
        q
    }

    /// Least nonnegative residue modulo `m > 0`.
    pub fn rem_euclid_u64(&self, m: u64) -> u64 {
        assert!(m > 0);
        match &self.0 {
            Repr::Small(s) => (*s as i128).rem_euclid(m as i128) as u64,
            Repr::Big(b) => {
                let r = b.mod_floor(&BigInt::from(m));
                r.to_u64().expect("residue below modulus")
            }
        }
    }
}

/// Greatest common divisor of two integers.
pub fn int_gcd(a: &Integer, b: &Integer) -> Integer {
    a.gcd(b)
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub(crate) fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer(Repr::Small(v))
    }
}

impl From<i32> for Integer {
    fn from(v: i32) -> Self {
        Integer(Repr::Small(v as i64))
    }
}

impl From<u64> for Integer {
    fn from(v: u64) -> Self {
        Integer::from_i128(v as i128)
    }
}

impl Ord for Integer {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Integer {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Integer {
    type Output = Integer;
    fn add(self, rhs: &Integer) -> Integer {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(s) = a.checked_add(*b) {
                return Integer(Repr::Small(s));
            }
        }
        Integer::from_big(self.to_big() + rhs.to_big())
    }
}

impl Sub for &Integer {
    type Output = Integer;
    fn sub(self, rhs: &Integer) -> Integer {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(s) = a.checked_sub(*b) {
                return Integer(Repr::Small(s));
            }
        }
        Integer::from_big(self.to_big() - rhs.to_big())
    }
}

impl Mul for &Integer {
    type Output = Integer;
    fn mul(self, rhs: &Integer) -> Integer {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            return Integer::from_i128(*a as i128 * *b as i128);
        }
        Integer::from_big(self.to_big() * rhs.to_big())
    }
}

impl Neg for &Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        match &self.0 {
            Repr::Small(s) => match s.checked_neg() {
                Some(n) => Integer(Repr::Small(n)),
                None => Integer::from_big(-BigInt::from(*s)),
            },
            Repr::Big(b) => Integer::from_big(-b.clone()),
        }
    }
}

impl Neg for Integer {
    type Output = Integer;
    fn neg(self) -> Integer {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Integer {
            type Output = Integer;
            fn $m(self, rhs: Integer) -> Integer {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(s) => write!(f, "{s}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseIntegerError;

impl fmt::Display for ParseIntegerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("malformed integer literal")
    }
}

impl FromStr for Integer {
    type Err = ParseIntegerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseIntegerError);
        }
        if let Ok(v) = s.parse::<i64>() {
            return Ok(Integer(Repr::Small(v)));
        }
        BigInt::from_str(s).map(Integer::from_big).map_err(|_| ParseIntegerError)
    }
}

impl Zero for Integer {
    fn zero() -> Self {
        Integer::ZERO
    }
    fn is_zero(&self) -> bool {
        Integer::is_zero(self)
    }
}
