use alloc::sync::Arc;
use alloc::vec::Vec;

use super::budget::Budget;
use super::buchberger::{interreduce, run};
use super::reduce::{reduce_terms, Divisor};
use crate::arith::Field;
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

/// A reduced Gröbner basis: monic, inter-reduced, sorted ascending by
/// leading monomial under the order of its ring.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis<K: Field> {
    ring: Ring<K>,
    elements: Vec<Polynomial<K>>,
}

impl<K: Field> GroebnerBasis<K> {
    pub(crate) fn from_reduced(ring: &Ring<K>, elements: Vec<Polynomial<K>>) -> Self {
        GroebnerBasis { ring: ring.clone(), elements }
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<K>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<K>> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True iff the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|p| p.leading_monomial().expect("nonzero").clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial<K>) -> Polynomial<K> {
        self.normal_form_budget(f, &Budget::unlimited()).expect("unlimited budget")
    }

    pub(crate) fn normal_form_budget(&self, f: &Polynomial<K>, budget: &Budget) -> Result<Polynomial<K>> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let divs: Vec<Divisor<K>> = self.elements.iter().map(|g| Divisor::new(g.clone())).collect();
        let refs: Vec<&Divisor<K>> = divs.iter().collect();
        let terms = reduce_terms(self.ring.field(), self.ring.order(), f.terms().to_vec(), &refs, Some(budget))?;
        Ok(Polynomial::from_canonical(&self.ring, terms))
    }

    pub fn contains(&self, f: &Polynomial<K>) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// A finitely generated ideal. Zero generators are dropped; a reduced
/// basis is cached when one is known for the ring's own order.
#[derive(Clone, Debug)]
pub struct Ideal<K: Field> {
    ring: Ring<K>,
    generators: Vec<Polynomial<K>>,
    basis: Option<Arc<GroebnerBasis<K>>>,
}

impl<K: Field> Ideal<K> {
    pub fn new(ring: &Ring<K>, generators: Vec<Polynomial<K>>) -> Result<Self> {
        if generators.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, basis: None })
    }

    pub fn zero(ring: &Ring<K>) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new(), basis: None }
    }

    pub fn unit(ring: &Ring<K>) -> Self {
        Ideal::from_basis(GroebnerBasis::from_reduced(ring, alloc::vec![Polynomial::one(ring)]))
    }

    /// The ideal generated by a reduced basis, with that basis cached.
    pub fn from_basis(gb: GroebnerBasis<K>) -> Self {
        Ideal { ring: gb.ring.clone(), generators: gb.elements.clone(), basis: Some(Arc::new(gb)) }
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<K>] {
        &self.generators
    }

    pub fn cached_basis(&self) -> Option<&GroebnerBasis<K>> {
        self.basis.as_deref()
    }

    /// Reduced basis under the ring's order; reuses the cache when present.
    pub fn groebner_basis(&self, budget: &Budget) -> Result<Arc<GroebnerBasis<K>>> {
        if let Some(b) = &self.basis {
            return Ok(b.clone());
        }
        Ok(Arc::new(run(&self.ring, &self.generators, budget)?))
    }

    /// Like [`Ideal::groebner_basis`] but stores the result.
    pub fn ensure_basis(&mut self, budget: &Budget) -> Result<Arc<GroebnerBasis<K>>> {
        let gb = self.groebner_basis(budget)?;
        self.basis = Some(gb.clone());
        Ok(gb)
    }

    /// The same generators viewed in a ring with identical variables but
    /// possibly a different order or grading.
    pub fn to_ring(&self, target: &Ring<K>) -> Result<Self> {
        if same_ring(target, &self.ring) {
            return Ok(self.clone());
        }
        if target.variables() != self.ring.variables() {
            return Ideal::new(target, self.generators.iter().map(|g| g.to_ring(target)).collect::<Result<_>>()?);
        }
        let gens = self.generators.iter().map(|g| Polynomial::from_terms(target, g.terms().iter().map(|t| (t.coeff.clone(), t.monomial.clone())).collect())).collect();
        let mut out = Ideal::new(target, gens)?;
        if let Some(b) = &self.basis {
            if b.order() == target.order() {
                let elems = b.elements.iter().map(|g| Polynomial::from_canonical(target, g.terms().to_vec())).collect();
                out.basis = Some(Arc::new(GroebnerBasis::from_reduced(target, elems)));
            }
        }
        Ok(out)
    }

    pub fn contains(&self, f: &Polynomial<K>, budget: &Budget) -> Result<bool> {
        ideal_membership(f, self, budget)
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal<K>, budget: &Budget) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let gb = self.groebner_basis(budget)?;
        for g in &other.generators {
            if !gb.normal_form_budget(g, budget)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Ideal<K>) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<K>) -> Result<Self> {
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f * g);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        Ok(self.groebner_basis(budget)?.is_unit())
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger<K: Field>(ideal: &Ideal<K>, order: &MonomialOrder, budget: &Budget) -> Result<GroebnerBasis<K>> {
    let ring = if ideal.ring.order() == order { ideal.ring.clone() } else { ideal.ring.with_order(order.clone())? };
    let moved = ideal.to_ring(&ring)?;
    if let Some(b) = &moved.basis {
        return Ok((**b).clone());
    }
    run(&ring, &moved.generators, budget)
}

/// Inter-reduces a Gröbner basis to the unique reduced monic basis.
pub fn reduce_basis<K: Field>(g: &GroebnerBasis<K>) -> GroebnerBasis<K> {
    let elems = interreduce(&g.ring, g.elements.clone(), &Budget::unlimited()).expect("unlimited budget");
    GroebnerBasis::from_reduced(&g.ring, elems)
}

/// Builds a basis object from elements the caller asserts form a Gröbner
/// basis under `ring`'s order, then reduces it.
pub fn reduce_elements<K: Field>(ring: &Ring<K>, elements: Vec<Polynomial<K>>) -> Result<GroebnerBasis<K>> {
    if elements.iter().any(|g| !same_ring(g.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    Ok(GroebnerBasis::from_reduced(ring, interreduce(ring, elements, &Budget::unlimited())?))
}

pub fn ideal_membership<K: Field>(f: &Polynomial<K>, ideal: &Ideal<K>, budget: &Budget) -> Result<bool> {
    if !same_ring(f.ring(), &ideal.ring) {
        return Err(Error::RingMismatch);
    }
    Ok(ideal.groebner_basis(budget)?.normal_form_budget(f, budget)?.is_zero())
}

/// Equality of ideals by comparing reduced bases under the first ideal's
/// ring order.
pub fn ideal_equal<K: Field>(a: &Ideal<K>, b: &Ideal<K>, budget: &Budget) -> Result<bool> {
    if a.ring.variables() != b.ring.variables() || a.ring.field() != b.ring.field() {
        return Err(Error::RingMismatch);
    }
    let gb_a = a.groebner_basis(budget)?;
    let b = b.to_ring(&a.ring)?;
    let gb_b = b.groebner_basis(budget)?;
    Ok(gb_a.elements == gb_b.elements)
}

/// The monomial ideal generated by the leading monomials of a reduced basis.
pub fn leading_term_ideal<K: Field>(ideal: &Ideal<K>, budget: &Budget) -> Result<Ideal<K>> {
    let gb = ideal.groebner_basis(budget)?;
    let ring = &ideal.ring;
    let gens = gb.leading_monomials().into_iter().map(|m| Polynomial::monomial(ring, ring.field().one(), m)).collect();
    Ideal::new(ring, gens)
}

/// Krull dimension of `ring / ideal`; `-1` for the unit ideal.
pub fn dimension<K: Field>(ideal: &Ideal<K>, budget: &Budget) -> Result<i64> {
    let gb = ideal.groebner_basis(budget)?;
    if gb.is_unit() {
        return Ok(-1);
    }
    let supports: Vec<Vec<usize>> = gb.leading_monomials().iter().map(|m| m.support().collect()).collect();
    let n = ideal.ring.nvars();
    Ok((n - min_hitting_set(n, &supports)) as i64)
}

/// Size of a smallest variable set meeting every support; its complement
/// is a largest set containing no leading monomial's support.
pub fn min_hitting_set(nvars: usize, supports: &[Vec<usize>]) -> usize {
    let mut sets: Vec<Vec<usize>> = supports.to_vec();
    for s in &mut sets {
        s.sort_unstable();
        s.dedup();
    }
    sets.sort_by_key(Vec::len);
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|m| m.iter().all(|v| s.binary_search(v).is_ok())) {
            minimal.push(s);
        }
    }
    let mut chosen = alloc::vec![false; nvars];
    let mut best = nvars;
    search(&minimal, &mut chosen, 0, &mut best);
    best
}

fn search(sets: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let unhit = sets.iter().filter(|s| !s.iter().any(|&v| chosen[v])).min_by_key(|s| s.len());
    let Some(s) = unhit else {
        *best = size;
        return;
    };
    if size + 1 >= *best {
        return;
    }
    for &v in s {
        chosen[v] = true;
        search(sets, chosen, size + 1, best);
        chosen[v] = false;
    }
}
