use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::Field;
use crate::groebner::{reduce_elements, Budget, Ideal};
use crate::poly::{same_ring, Polynomial, Ring};
use crate::{Error, Result};

pub(crate) fn post(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Postcondition(what.into()))
    }
}

fn check_same<K: Field>(a: &Ideal<K>, b: &Ideal<K>) -> Result<()> {
    if same_ring(a.ring(), b.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Reduced basis of `gens` under an order with `elim` as a dominating
/// grevlex block; the elements free of `elim` form the reduced basis of
/// the elimination ideal, returned in the ring on the remaining variables.
pub(crate) fn eliminate_indices<K: Field>(
    ring: &Ring<K>,
    gens: &[Polynomial<K>],
    elim: &[usize],
    budget: &Budget,
) -> Result<Ideal<K>> {
    let n = ring.nvars();
    let mut is_elim = alloc::vec![false; n];
    for &v in elim {
        if v >= n {
            return Err(Error::InvalidArgument("elimination index out of range".into()));
        }
        is_elim[v] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&v| !is_elim[v]).collect();
    let small = ring.restrict(&keep)?;
    if elim.is_empty() {
        let gb = Ideal::new(ring, gens.to_vec())?.groebner_basis(budget)?;
        let moved = gb.elements().iter().map(|p| p.to_ring(&small)).collect::<Result<Vec<_>>>()?;
        return Ok(Ideal::from_basis(reduce_elements(&small, moved)?));
    }
    let big = ring.with_order(ring.order().elimination(n, elim))?;
    let lifted = gens.iter().map(|g| g.to_ring(&big)).collect::<Result<Vec<_>>>()?;
    let gb = Ideal::new(&big, lifted)?.groebner_basis(budget)?;
    let map: Vec<Option<usize>> = {
        let mut m = alloc::vec![None; n];
        for (i, &v) in keep.iter().enumerate() {
            m[v] = Some(i);
        }
        m
    };
    let kept = gb
        .elements()
        .iter()
        .filter(|p| elim.iter().all(|&v| !p.uses_var(v)))
        .map(|p| p.remap(&small, &map))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::from_basis(reduce_elements(&small, kept)?))
}

/// `I ∩ k[vars \ E]` in the ring on the remaining variables.
pub fn eliminate<K: Field>(ideal: &Ideal<K>, vars: &[&str], budget: &Budget) -> Result<Ideal<K>> {
    let ring = ideal.ring();
    let mut idx = vars.iter().map(|v| ring.require_var(v)).collect::<Result<Vec<_>>>()?;
    idx.sort_unstable();
    idx.dedup();
    let out = eliminate_indices(ring, ideal.generators(), &idx, budget)?;
    if budget.check_posts() {
        for g in out.generators() {
            let back = g.to_ring(ring)?;
            post(ideal.contains(&back, budget)?, "eliminate: generator outside the input ideal")?;
        }
    }
    Ok(out)
}

/// Adjoins fresh variables in front of `ring`, avoiding every name in `avoid`.
pub(crate) fn adjoin_fresh<K: Field>(ring: &Ring<K>, bases: &[&str], avoid: &[String]) -> Result<Ring<K>> {
    let mut names: Vec<String> = Vec::new();
    for base in bases {
        let mut k = 0usize;
        loop {
            let cand = if k == 0 { String::from(*base) } else { alloc::format!("{base}_{k}") };
            if ring.var_index(&cand).is_none() && !avoid.contains(&cand) && !names.contains(&cand) {
                names.push(cand);
                break;
            }
            k += 1;
        }
    }
    ring.adjoin_front(&names)
}

/// Moves an ideal computed in an isomorphic copy of `ring` back into `ring`.
pub(crate) fn home<K: Field>(ideal: Ideal<K>, ring: &Ring<K>) -> Result<Ideal<K>> {
    ideal.to_ring(ring)
}

/// `I ∩ J` via `t·I + (1−t)·J` and elimination of `t`.
pub fn intersect<K: Field>(i: &Ideal<K>, j: &Ideal<K>, budget: &Budget) -> Result<Ideal<K>> {
    check_same(i, j)?;
    let ring = i.ring();
    let big = adjoin_fresh(ring, &["t"], &[])?;
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::with_capacity(i.generators().len() + j.generators().len());
    for f in i.generators() {
        gens.push(&t * &f.to_ring(&big)?);
    }
    for g in j.generators() {
        gens.push(&one_minus_t * &g.to_ring(&big)?);
    }
    let out = home(eliminate_indices(&big, &gens, &[0], budget)?, ring)?;
    if budget.check_posts() {
        post(i.contains_ideal(&out, budget)?, "intersect: result not contained in I")?;
        post(j.contains_ideal(&out, budget)?, "intersect: result not contained in J")?;
    }
    Ok(out)
}

/// `I : J`, the intersection over generators `g` of `J` of `(I ∩ (g)) / g`.
pub fn quotient<K: Field>(i: &Ideal<K>, j: &Ideal<K>, budget: &Budget) -> Result<Ideal<K>> {
    check_same(i, j)?;
    if j.generators().is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let ring = i.ring();
    let gb_i = i.groebner_basis(budget)?;
    let mut acc: Option<Ideal<K>> = None;
    for g in j.generators() {
        if gb_i.normal_form(g).is_zero() {
            continue;
        }
        let cap = intersect(i, &Ideal::new(ring, alloc::vec![g.clone()])?, budget)?;
        let divided = cap.generators().iter().map(|h| h.div_exact(g)).collect::<Result<Vec<_>>>()?;
        let part = Ideal::from_basis(reduce_elements(ring, divided)?);
        acc = Some(match acc {
            None => part,
            Some(prev) => intersect(&prev, &part, budget)?,
        });
    }
    let out = match acc {
        Some(q) => q,
        None => Ideal::unit(ring),
    };
    if budget.check_posts() {
        post(out.contains_ideal(i, budget)?, "quotient: I not contained in I : J")?;
        post(i.contains_ideal(&out.product(j)?, budget)?, "quotient: (I : J)·J not contained in I")?;
    }
    Ok(out)
}

/// `I : g^∞` via `I + (1 − t·g)` and elimination of `t`.
pub fn saturate<K: Field>(i: &Ideal<K>, g: &Polynomial<K>, budget: &Budget) -> Result<Ideal<K>> {
    if !same_ring(i.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = i.ring();
    let big = adjoin_fresh(ring, &["t"], &[])?;
    let t = Polynomial::var(&big, 0);
    let mut gens = i.generators().iter().map(|f| f.to_ring(&big)).collect::<Result<Vec<_>>>()?;
    gens.push(&Polynomial::one(&big) - &(&t * &g.to_ring(&big)?));
    let out = home(eliminate_indices(&big, &gens, &[0], budget)?, ring)?;
    if budget.check_posts() {
        post(out.contains_ideal(i, budget)?, "saturate: I not contained in I : g^inf")?;
        let again = quotient(&out, &Ideal::new(ring, alloc::vec![g.clone()])?, &Budget::unlimited())?;
        post(
            crate::groebner::ideal_equal(&again, &out, budget)?,
            "saturate: result not stable under another colon by g",
        )?;
    }
    Ok(out)
}
