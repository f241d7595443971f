use alloc::string::String;
use alloc::vec::Vec;

use super::elimination::{eliminate_indices, home, post};
use crate::arith::Field;
use crate::groebner::{Budget, Ideal};
use crate::poly::{same_ring, Polynomial, Ring};
use crate::{Error, Result};

/// A map `source → target / Q` localized at `d`: variables whose name
/// occurs in both rings map identically, every other source variable `Y_j`
/// maps to `numerators[j] / d` (in source variable order).
#[derive(Clone, Debug)]
pub struct AlgebraMap<K: Field> {
    source: Ring<K>,
    target: Ring<K>,
    images: Vec<(usize, Polynomial<K>)>,
    denominator: Polynomial<K>,
    modulus: Ideal<K>,
}

impl<K: Field> AlgebraMap<K> {
    /// `images` pairs source-only variable names with numerators in `target`.
    pub fn new(
        source: &Ring<K>,
        target: &Ring<K>,
        images: Vec<(&str, Polynomial<K>)>,
        denominator: Option<Polynomial<K>>,
        modulus: Ideal<K>,
    ) -> Result<Self> {
        let denominator = denominator.unwrap_or_else(|| Polynomial::one(target));
        if denominator.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !same_ring(denominator.ring(), target) || !same_ring(modulus.ring(), target) {
            return Err(Error::RingMismatch);
        }
        if source.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let mut resolved: Vec<(usize, Polynomial<K>)> = Vec::with_capacity(images.len());
        for (name, p) in images {
            let v = source.require_var(name)?;
            if target.var_index(name).is_some() {
                return Err(Error::InvalidArgument(alloc::format!("{name} is a base variable and maps to itself")));
            }
            if !same_ring(p.ring(), target) {
                return Err(Error::RingMismatch);
            }
            if resolved.iter().any(|(w, _)| *w == v) {
                return Err(Error::DuplicateVariable(name.into()));
            }
            resolved.push((v, p));
        }
        for (v, name) in source.variables().iter().enumerate() {
            if target.var_index(name).is_none() && !resolved.iter().any(|(w, _)| *w == v) {
                return Err(Error::InvalidArgument(alloc::format!("no image given for {name}")));
            }
        }
        resolved.sort_by_key(|(v, _)| *v);
        Ok(AlgebraMap { source: source.clone(), target: target.clone(), images: resolved, denominator, modulus })
    }

    pub fn source(&self) -> &Ring<K> {
        &self.source
    }

    pub fn target(&self) -> &Ring<K> {
        &self.target
    }

    pub fn denominator(&self) -> &Polynomial<K> {
        &self.denominator
    }

    pub fn modulus(&self) -> &Ideal<K> {
        &self.modulus
    }

    fn image_of(&self, v: usize) -> Option<&Polynomial<K>> {
        self.images.iter().find(|(w, _)| *w == v).map(|(_, p)| p)
    }

    /// `d^m · h(images)` in the target ring, where `m` is the largest total
    /// degree of `h` in the source-only variables. Lies in `Q` exactly when
    /// `h` is in the kernel.
    pub fn cleared_image(&self, h: &Polynomial<K>) -> Result<Polynomial<K>> {
        if !same_ring(h.ring(), &self.source) {
            return Err(Error::RingMismatch);
        }
        let tgt = &self.target;
        let image_deg = |m: &crate::poly::Monomial| -> u64 {
            self.images.iter().map(|(v, _)| u64::from(m.exponent(*v))).sum()
        };
        let top = h.terms().iter().map(|t| image_deg(&t.monomial)).max().unwrap_or(0);
        let mut d_pows = alloc::vec![Polynomial::one(tgt)];
        let mut acc = Polynomial::zero(tgt);
        for t in h.terms() {
            let mut p = Polynomial::constant(tgt, t.coeff.clone());
            for (v, &e) in t.monomial.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = match self.image_of(v) {
                    Some(num) => num.clone(),
                    None => Polynomial::var(tgt, tgt.require_var(&self.source.variables()[v])?),
                };
                p = &p * &base.pow(u32::from(e));
            }
            let k = (top - image_deg(&t.monomial)) as usize;
            while d_pows.len() <= k {
                let next = d_pows.last().unwrap() * &self.denominator;
                d_pows.push(next);
            }
            acc = &acc + &(&p * &d_pows[k]);
        }
        Ok(acc)
    }
}

/// Kernel of the map, as the elimination of target-only variables from
/// `(Q + (d·Y_j − num_j)) : d^∞`. The saturation is realized by adjoining
/// `1 − t·d` and eliminating `t` in the same elimination step.
pub fn algebra_map_kernel<K: Field>(m: &AlgebraMap<K>, budget: &Budget) -> Result<Ideal<K>> {
    let source = &m.source;
    let target_only: Vec<String> =
        m.target.variables().iter().filter(|v| source.var_index(v).is_none()).cloned().collect();
    let need_t = !m.denominator.is_constant();
    let mut names: Vec<String> = Vec::new();
    if need_t {
        let taken = |c: &str| source.var_index(c).is_some() || m.target.var_index(c).is_some();
        let mut c = String::from("t");
        let mut i = 1usize;
        while taken(&c) {
            c = alloc::format!("t_{i}");
            i += 1;
        }
        names.push(c);
    }
    names.extend(target_only);
    let big = source.adjoin_front(&names)?;
    let k = names.len();

    let lift = |p: &Polynomial<K>| p.to_ring(&big);
    let d = lift(&m.denominator)?;
    let mut gens = m.modulus.generators().iter().map(lift).collect::<Result<Vec<_>>>()?;
    for (v, num) in &m.images {
        let y = Polynomial::var(&big, v + k);
        gens.push(&(&d * &y) - &lift(num)?);
    }
    if need_t {
        let t = Polynomial::var(&big, 0);
        gens.push(&Polynomial::one(&big) - &(&t * &d));
    }
    let elim: Vec<usize> = (0..k).collect();
    let out = home(eliminate_indices(&big, &gens, &elim, budget)?, source)?;
    if budget.check_posts() {
        for h in out.generators() {
            post(m.modulus.contains(&m.cleared_image(h)?, budget)?, "kernel: generator does not map into Q")?;
        }
    }
    Ok(out)
}
