use alloc::vec::Vec;

use super::elimination::{adjoin_fresh, eliminate_indices, home, post};
use crate::arith::Field;
use crate::groebner::{Budget, Ideal};
use crate::poly::{Exponent, Monomial, Polynomial};
use crate::{Error, Result};

/// Largest `w`-homogeneous ideal contained in `I`.
///
/// Each generator `g` is replaced by `g(u^w x) = Σ_d u^d g_d(x)`, the
/// result saturated by `u` (through `1 − t·u`) and contracted to the
/// original variables, with `t` and `u` eliminated together.
///
/// The substituted ideal `I^u` is homogeneous for the grading
/// `deg x_i = −w_i`, `deg u = 1`, so are its saturation and contraction:
/// the contraction is `w`-homogeneous. Setting `u = 1` in `u^m h ∈ I^u`
/// shows it lies in `I`. Conversely a homogeneous `f_d ∈ I` of degree `d`
/// satisfies `u^d f_d(x) = f_d(u^w x) ∈ I^u`, so `f_d` survives the
/// saturation. Hence the contraction is exactly the largest homogeneous
/// subideal.
pub fn largest_homogeneous_subideal<K: Field>(i: &Ideal<K>, weights: &[u32], budget: &Budget) -> Result<Ideal<K>> {
    let ring = i.ring();
    if weights.len() != ring.nvars() {
        return Err(Error::GradingMismatch { expected: ring.nvars(), got: weights.len() });
    }
    let big = adjoin_fresh(ring, &["t", "u"], &[])?;
    let one = big.field().one();
    let mut gens: Vec<Polynomial<K>> = Vec::with_capacity(i.generators().len() + 1);
    for g in i.generators() {
        let raw = g
            .terms()
            .iter()
            .map(|t| {
                let d = t.monomial.weighted_degree(weights);
                let mut exps: Vec<Exponent> = Vec::with_capacity(big.nvars());
                exps.push(0);
                exps.push(Exponent::try_from(d).map_err(|_| Error::InvalidArgument("weighted degree overflow".into()))?);
                exps.extend_from_slice(t.monomial.exponents());
                Ok((t.coeff.clone(), Monomial::from_exponents(&exps)))
            })
            .collect::<Result<Vec<_>>>()?;
        gens.push(Polynomial::from_terms(&big, raw));
    }
    let tu = Monomial::from_exponents(&{
        let mut e = alloc::vec![0; big.nvars()];
        e[0] = 1;
        e[1] = 1;
        e
    });
    gens.push(&Polynomial::one(&big) - &Polynomial::monomial(&big, one, tu));
    let out = home(eliminate_indices(&big, &gens, &[0, 1], budget)?, ring)?;
    if budget.check_posts() {
        post(out.generators().iter().all(|g| g.is_homogeneous(weights)), "homogeneous part: inhomogeneous generator")?;
        post(i.contains_ideal(&out, budget)?, "homogeneous part: result not contained in I")?;
    }
    Ok(out)
}
