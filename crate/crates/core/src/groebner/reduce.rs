use alloc::vec::Vec;

use super::budget::Budget;
use crate::arith::Field;
use crate::poly::{sub_mul_merge, Monomial, Polynomial, Term};
use crate::{Error, Result};

/// A nonzero divisor with its leading data precomputed.
#[derive(Clone, Debug)]
pub(crate) struct Divisor<K: Field> {
    pub poly: Polynomial<K>,
    pub lm: Monomial,
    pub mask: u64,
    lc_inv: Option<K::Elem>,
}

impl<K: Field> Divisor<K> {
    pub fn new(poly: Polynomial<K>) -> Self {
        let lt = poly.leading_term().expect("divisor must be nonzero");
        let lm = lt.monomial.clone();
        let mask = lm.support_mask();
        let f = poly.field();
        let lc_inv = if f.is_one(&lt.coeff) { None } else { Some(f.inv(&lt.coeff).expect("nonzero")) };
        Divisor { poly, lm, mask, lc_inv }
    }

    #[inline]
    pub fn divides(&self, m: &Monomial, m_mask: u64) -> bool {
        self.mask & !m_mask == 0 && self.lm.divides(m)
    }
}

const POLL_EVERY: u32 = 512;

/// Full reduction of `terms` by `divisors`: repeatedly cancels the largest
/// term divisible by some leading monomial, trying divisors in list order.
pub(crate) fn reduce_terms<K: Field>(
    field: &K,
    order: &crate::poly::MonomialOrder,
    mut p: Vec<Term<K>>,
    divisors: &[&Divisor<K>],
    budget: Option<&Budget>,
) -> Result<Vec<Term<K>>> {
    let mut done: Vec<Term<K>> = Vec::new();
    let mut scratch: Vec<Term<K>> = Vec::new();
    let mut idx = 0usize;
    let mut steps = 0u32;
    while idx < p.len() {
        let m = &p[idx].monomial;
        let mask = m.support_mask();
        let Some(d) = divisors.iter().find(|d| d.divides(m, mask)) else {
            idx += 1;
            continue;
        };
        steps += 1;
        if steps.is_multiple_of(POLL_EVERY) {
            if let Some(b) = budget {
                b.poll()?;
            }
        }
        let shift = d.lm.quotient_of(m).expect("divisibility checked");
        let mut drain = p.drain(..);
        done.extend(drain.by_ref().take(idx));
        let head = drain.next().expect("head term");
        let c = match &d.lc_inv {
            None => head.coeff,
            Some(inv) => field.mul(&head.coeff, inv),
        };
        scratch.clear();
        sub_mul_merge(field, order, drain, &c, &shift, &d.poly.terms()[1..], &mut scratch);
        core::mem::swap(&mut p, &mut scratch);
        idx = 0;
    }
    done.append(&mut p);
    Ok(done)
}

/// Remainder of multivariate division of `f` by `divisors` (zero divisors
/// are ignored). No term of the result is divisible by a leading monomial
/// of a divisor.
pub fn normal_form<K: Field>(f: &Polynomial<K>, divisors: &[Polynomial<K>]) -> Polynomial<K> {
    let divs: Vec<Divisor<K>> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            assert!(crate::poly::same_ring(g.ring(), f.ring()), "normal form across different rings");
            Divisor::new(g.clone())
        })
        .collect();
    let refs: Vec<&Divisor<K>> = divs.iter().collect();
    let terms = reduce_terms(f.field(), f.ring().order(), f.terms().to_vec(), &refs, None).expect("no budget, no timeout");
    Polynomial::from_canonical(f.ring(), terms)
}

/// `(L/LT(f)) f - (L/LT(g)) g` with `L` the lcm of the leading monomials.
pub fn s_polynomial<K: Field>(f: &Polynomial<K>, g: &Polynomial<K>) -> Result<Polynomial<K>> {
    let (ft, gt) = match (f.leading_term(), g.leading_term()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial),
    };
    let field = f.field();
    let lcm = ft.monomial.lcm(&gt.monomial);
    let mf = ft.monomial.quotient_of(&lcm).expect("lcm");
    let mg = gt.monomial.quotient_of(&lcm).expect("lcm");
    let a = f.mul_term(&field.inv(&ft.coeff)?, &mf);
    let b = g.mul_term(&field.inv(&gt.coeff)?, &mg);
    Ok(&a - &b)
}

/// S-polynomial of monic divisors, skipping the cancelling heads.
pub(crate) fn s_poly_monic<K: Field>(f: &Divisor<K>, g: &Divisor<K>) -> Vec<Term<K>> {
    let field = f.poly.field();
    let order = f.poly.ring().order();
    let lcm = f.lm.lcm(&g.lm);
    let mf = f.lm.quotient_of(&lcm).expect("lcm");
    let mg = g.lm.quotient_of(&lcm).expect("lcm");
    let a = f.poly.terms()[1..].iter().map(|t| Term { coeff: t.coeff.clone(), monomial: t.monomial.mul(&mf) });
    let mut out = Vec::new();
    sub_mul_merge(field, order, a, &field.one(), &mg, &g.poly.terms()[1..], &mut out);
    out
}
