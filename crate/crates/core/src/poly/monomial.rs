use smallvec::SmallVec;

pub type Exponent = u16;

/// Exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 24]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> Exponent {
        self.exps[var]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    /// Product of monomials. Panics if an exponent overflows.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|&a| {
                    u32::from(a)
                        .checked_mul(e)
                        .and_then(|v| Exponent::try_from(v).ok())
                        .expect("monomial exponent overflow")
                })
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| b - a).collect() })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i mod 64` is set when variable `i` occurs. `a | b` requires
    /// `mask(a) & !mask(b) == 0`.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | 1u64 << (i % 64))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Reindexes into a ring with `target_nvars` variables; `map[i]` is the
    /// new position of variable `i`, or `None` if it must not occur.
    pub fn remap(&self, map: &[Option<usize>], target_nvars: usize) -> Option<Monomial> {
        let mut out = Monomial::one(target_nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            out.exps[map[i]?] = e;
        }
        Some(out)
    }

    pub(crate) fn set_exponent(&mut self, var: usize, e: Exponent) {
        self.exps[var] = e;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_lcm() {
        let a = Monomial::from_exponents(&[2, 1, 0]);
        let b = Monomial::from_exponents(&[1, 3, 2]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 3, 2]);
        assert!(!a.divides(&b));
        let c = a.lcm(&b);
        assert_eq!(a.quotient_of(&c).unwrap().exponents(), &[0, 2, 2]);
        assert!(Monomial::from_exponents(&[1, 0, 0]).is_coprime(&Monomial::from_exponents(&[0, 4, 1])));
        assert_eq!(a.support_mask(), 0b011);
    }

    #[test]
    fn remap_rejects_dropped_variables() {
        let m = Monomial::from_exponents(&[1, 0, 2]);
        assert_eq!(m.remap(&[Some(1), None, Some(0)], 2).unwrap().exponents(), &[2, 1]);
        assert!(m.remap(&[None, Some(0), Some(1)], 2).is_none());
    }
}
