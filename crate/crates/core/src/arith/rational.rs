use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::integer::{gcd_u128, Integer};
use crate::{Error, Result};

/// A rational number in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: Integer,
    den: Integer,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: Integer::ZERO, den: Integer::ONE };
    pub const ONE: Rational = Rational { num: Integer::ONE, den: Integer::ONE };

    /// Builds `num / den` in canonical form.
    pub fn new(num: Integer, den: Integer) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Integer, den: Integer) -> Self {
        if num.is_zero() {
            return Rational::ZERO;
        }
        if let (Some(n), Some(d)) = (num.as_i64(), den.as_i64()) {
            return Self::from_i128_pair(n as i128, d as i128);
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Rational { num: n, den: d }
    }

    fn from_i128_pair(mut n: i128, mut d: i128) -> Self {
        debug_assert!(d != 0);
        if n == 0 {
            return Rational::ZERO;
        }
        let g = gcd_u128(n.unsigned_abs(), d.unsigned_abs());
        if g > 1 {
            // g divides both, so the quotients fit whenever g > 1
            n /= g as i128;
            d /= g as i128;
        }
        if d < 0 {
            match (n.checked_neg(), d.checked_neg()) {
                (Some(nn), Some(dd)) => {
                    n = nn;
                    d = dd;
                }
                _ => {
                    let num = -Integer::from_i128(n);
                    let den = -Integer::from_i128(d);
                    return Rational { num, den };
                }
            }
        }
        Rational { num: Integer::from_i128(n), den: Integer::from_i128(d) }
    }

    pub fn from_integer(n: Integer) -> Self {
        Rational { num: n, den: Integer::ONE }
    }

    pub fn numer(&self) -> &Integer {
        &self.num
    }

    pub fn denom(&self) -> &Integer {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Rational {
        Rational { num: self.num.abs(), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Rational> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        Ok(self * &rhs.inv()?)
    }

    fn small_parts(&self) -> Option<(i128, i128)> {
        Some((self.num.as_i64()? as i128, self.den.as_i64()? as i128))
    }
}

/// Canonical rational `n / d`.
pub fn rat_normalize(n: Integer, d: Integer) -> Result<Rational> {
    Rational::new(n, d)
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(Integer::from(v))
    }
}

impl From<Integer> for Rational {
    fn from(v: Integer) -> Self {
        Rational::from_integer(v)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        if let (Some((a, b)), Some((c, d))) = (self.small_parts(), rhs.small_parts()) {
            if b == 1 && d == 1 {
                return Rational::from_integer(Integer::from_i128(a + c));
            }
            if let (Some(ad), Some(cb), Some(bd)) = (a.checked_mul(d), c.checked_mul(b), b.checked_mul(d)) {
                if let Some(n) = ad.checked_add(cb) {
                    return Rational::from_i128_pair(n, bd);
                }
            }
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        Rational::normalize(num, &self.den * &rhs.den)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        if let (Some((a, b)), Some((c, d))) = (self.small_parts(), rhs.small_parts()) {
            if b == 1 && d == 1 {
                return Rational::from_integer(Integer::from_i128(a * c));
            }
            return Rational::from_i128_pair(a * c, b * d);
        }
        Rational::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
