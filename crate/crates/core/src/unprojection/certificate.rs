use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::Field;
use crate::groebner::{Budget, Ideal};
use crate::ideal_ops::quotient;
use crate::poly::{same_ring, Polynomial};
use crate::{Error, Result};

/// Outcome of [`polynomial_ring_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `ring / K` is a polynomial ring on `residual`.
    Pass { residual: Vec<String> },
    Fail { reason: String },
}

/// Tries to exhibit `ring / K` as a polynomial ring: under an order with `E`
/// as a dominating block the reduced basis must consist of elements
/// `e − g_e` with `e ∈ E` a bare variable and `g_e` free of `E`.
pub fn polynomial_ring_certificate<K: Field>(k: &Ideal<K>, elim: &[&str], budget: &Budget) -> Result<Certificate> {
    let ring = k.ring();
    let mut e_idx = elim.iter().map(|v| ring.require_var(v)).collect::<Result<Vec<_>>>()?;
    e_idx.sort_unstable();
    e_idx.dedup();
    let mut in_e = alloc::vec![false; ring.nvars()];
    for &v in &e_idx {
        in_e[v] = true;
    }
    let block = ring.with_order(ring.order().elimination(ring.nvars(), &e_idx))?;
    let moved = Ideal::new(&block, k.generators().iter().map(|g| g.to_ring(&block)).collect::<Result<Vec<_>>>()?)?;
    let gb = moved.groebner_basis(budget)?;
    if gb.is_unit() {
        return Ok(Certificate::Fail { reason: "the ideal is the whole ring".into() });
    }
    let mut solved = alloc::vec![false; ring.nvars()];
    for g in gb.elements() {
        let lm = g.leading_monomial().expect("nonzero");
        let support: Vec<usize> = lm.support().collect();
        let shown = || format!("{g}");
        if lm.degree() != 1 || !in_e[support[0]] {
            return Ok(Certificate::Fail { reason: format!("leading term of {} is not a bare eliminated variable", shown()) });
        }
        if g.terms()[1..].iter().any(|t| t.monomial.support().any(|v| in_e[v])) {
            return Ok(Certificate::Fail { reason: format!("tail of {} involves an eliminated variable", shown()) });
        }
        solved[support[0]] = true;
    }
    let residual = ring.variables().iter().enumerate().filter(|(i, _)| !solved[*i]).map(|(_, v)| v.clone()).collect();
    Ok(Certificate::Pass { residual })
}

/// Residual ideal of `D` with respect to `z` in `ring / Q`, as the lift of
/// `((z) + Q) : D`. All ideals are lifted, so `Q ⊆ D` is required.
pub fn residual_ideal<K: Field>(q: &Ideal<K>, d: &Ideal<K>, z: &Polynomial<K>, budget: &Budget) -> Result<Ideal<K>> {
    if !same_ring(q.ring(), d.ring()) || !same_ring(q.ring(), z.ring()) {
        return Err(Error::RingMismatch);
    }
    if q.contains(z, budget)? {
        return Err(Error::Precondition("z is zero in the quotient".into()));
    }
    if !d.contains(z, budget)? {
        return Err(Error::Precondition("z does not lie in D".into()));
    }
    if !d.contains_ideal(q, budget)? {
        return Err(Error::Precondition("Q is not contained in D".into()));
    }
    let mut gens = alloc::vec![z.clone()];
    gens.extend(q.generators().iter().cloned());
    quotient(&Ideal::new(q.ring(), gens)?, d, budget)
}
