use alloc::vec::Vec;
use core::cmp::Ordering;

use super::basis::GroebnerBasis;
use super::budget::Budget;
use super::reduce::{reduce_terms, s_poly_monic, Divisor};
use crate::arith::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, Term};
use crate::{Error, Result};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    seq: u64,
}

struct State<'a, K: Field> {
    ring: &'a Ring<K>,
    basis: Vec<Divisor<K>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    next_seq: u64,
}

impl<K: Field> State<'_, K> {
    fn active_divisors(&self) -> Vec<&Divisor<K>> {
        self.basis.iter().zip(&self.active).filter(|(_, &a)| a).map(|(d, _)| d).collect()
    }

    fn reduce(&self, terms: Vec<Term<K>>, budget: &Budget) -> Result<Option<Polynomial<K>>> {
        let divs = self.active_divisors();
        let reduced = reduce_terms(self.ring.field(), self.ring.order(), terms, &divs, Some(budget))?;
        if reduced.is_empty() {
            return Ok(None);
        }
        let p = Polynomial::from_canonical(self.ring, reduced);
        Ok(Some(p.monic()))
    }

    /// Adds `h` and updates the pair set with the Gebauer–Möller installation
    /// of the product (coprime leads) and chain criteria.
    fn insert(&mut self, h: Polynomial<K>) {
        let hd = Divisor::new(h);
        let k = self.basis.len();

        let cands: Vec<(usize, Monomial, bool)> = (0..k)
            .filter(|&j| self.active[j])
            .map(|j| {
                let lm = &self.basis[j].lm;
                (j, lm.lcm(&hd.lm), lm.is_coprime(&hd.lm))
            })
            .collect();
        let mut kept = alloc::vec![false; cands.len()];
        for idx in 0..cands.len() {
            let (_, lcm, coprime) = &cands[idx];
            if *coprime {
                kept[idx] = true;
                continue;
            }
            let later = cands[idx + 1..].iter().any(|(_, l, _)| l.divides(lcm));
            let earlier = (0..idx).filter(|&o| kept[o]).any(|o| cands[o].1.divides(lcm));
            kept[idx] = !(later || earlier);
        }

        self.pairs.retain(|p| {
            !(hd.lm.divides(&p.lcm)
                && self.basis[p.i].lm.lcm(&hd.lm) != p.lcm
                && self.basis[p.j].lm.lcm(&hd.lm) != p.lcm)
        });

        for (idx, (j, lcm, coprime)) in cands.into_iter().enumerate() {
            if kept[idx] && !coprime {
                self.pairs.push(Pair { i: j, j: k, lcm, seq: self.next_seq });
                self.next_seq += 1;
            }
        }

        for j in 0..k {
            if self.active[j] && hd.lm.divides(&self.basis[j].lm) {
                self.active[j] = false;
            }
        }
        self.basis.push(hd);
        self.active.push(true);
    }

    fn take_min_pair(&mut self, order: &MonomialOrder) -> Option<Pair> {
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            order.compare(&pa.lcm, &pb.lcm).then(pa.seq.cmp(&pb.seq))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Buchberger's algorithm under the order of `ring`.
///
/// Pairs are processed by smallest lcm, ties broken by creation sequence;
/// reductions cancel the leftmost reducible term first and try divisors in
/// insertion order. The result is the reduced basis.
pub(crate) fn run<K: Field>(ring: &Ring<K>, generators: &[Polynomial<K>], budget: &Budget) -> Result<GroebnerBasis<K>> {
    budget.charge(0)?;
    let mut st = State { ring, basis: Vec::new(), active: Vec::new(), pairs: Vec::new(), next_seq: 0 };
    let unit = || Ok(GroebnerBasis::from_reduced(ring, alloc::vec![Polynomial::one(ring)]));

    for g in generators {
        if !crate::poly::same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            continue;
        }
        if let Some(h) = st.reduce(g.terms().to_vec(), budget)? {
            if h.is_constant() {
                return unit();
            }
            st.insert(h);
        }
    }

    let mut processed = 0u64;
    while let Some(pair) = st.take_min_pair(ring.order()) {
        budget.charge(processed)?;
        processed += 1;
        let s = s_poly_monic(&st.basis[pair.i], &st.basis[pair.j]);
        if let Some(h) = st.reduce(s, budget)? {
            if h.is_constant() {
                return unit();
            }
            st.insert(h);
        }
    }

    let minimal: Vec<Polynomial<K>> = st
        .basis
        .into_iter()
        .zip(st.active)
        .filter(|(_, a)| *a)
        .map(|(d, _)| d.poly)
        .collect();
    Ok(GroebnerBasis::from_reduced(ring, interreduce(ring, minimal, budget)?))
}

/// Repeatedly replaces each element by its normal form modulo the others
/// until nothing changes; returns the monic result sorted ascending by
/// leading monomial. On a Gröbner basis this yields the reduced basis.
pub(crate) fn interreduce<K: Field>(ring: &Ring<K>, elems: Vec<Polynomial<K>>, budget: &Budget) -> Result<Vec<Polynomial<K>>> {
    let order = ring.order();
    let mut set: Vec<Polynomial<K>> = elems.into_iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    loop {
        budget.poll()?;
        set.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        let mut changed = false;
        let mut i = 0;
        while i < set.len() {
            let divs: Vec<Divisor<K>> =
                set.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| Divisor::new(p.clone())).collect();
            let refs: Vec<&Divisor<K>> = divs.iter().collect();
            let r = reduce_terms(ring.field(), order, set[i].terms().to_vec(), &refs, Some(budget))?;
            if r.is_empty() {
                set.remove(i);
                changed = true;
                continue;
            }
            let p = Polynomial::from_canonical(ring, r).monic();
            if p != set[i] {
                set[i] = p;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    set.sort_by(|a, b| order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    debug_assert!(set.windows(2).all(|w| order
        .compare(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap())
        == Ordering::Less));
    Ok(set)
}
