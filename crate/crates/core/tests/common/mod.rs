#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use unproj_core::arith::{Field, Rational, RationalField};
use unproj_core::poly::{make_ring, Monomial, MonomialOrder, Polynomial, Ring};

pub type Q = RationalField;

pub fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x00c0_ffee), failure_persistence: None, ..Config::default() }
}

pub fn ring(names: &[&str], order: MonomialOrder) -> Ring<Q> {
    make_ring(RationalField, names, order, None).unwrap()
}

/// Raw polynomial data: (numerator, denominator, exponents).
pub type RawPoly = Vec<(i64, i64, Vec<u16>)>;

pub fn raw_poly(nvars: usize, max_exp: u16, max_terms: usize) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((-9i64..=9, 1i64..=4, prop::collection::vec(0..=max_exp, nvars)), 0..=max_terms)
}

pub fn build<K: Field>(ring: &Ring<K>, raw: &RawPoly) -> Polynomial<K> {
    let k = ring.field();
    let terms = raw
        .iter()
        .map(|(n, d, e)| {
            let q = Rational::new((*n).into(), (*d).into()).unwrap();
            (k.from_rational(&q).unwrap(), Monomial::from_exponents(e))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Random polynomial with integer coefficients in `-c..=c`.
pub fn random_poly<K: Field>(rng: &mut ChaCha8Rng, ring: &Ring<K>, max_deg: u16, terms: usize, c: i64) -> Polynomial<K> {
    let n = ring.nvars();
    let k = ring.field();
    let raw = (0..terms)
        .map(|_| {
            let mut e = vec![0u16; n];
            let mut budget = rng.gen_range(0..=max_deg);
            while budget > 0 {
                e[rng.gen_range(0..n)] += 1;
                budget -= 1;
            }
            let mut v = 0;
            while v == 0 {
                v = rng.gen_range(-c..=c);
            }
            (k.from_i64(v), Monomial::from_exponents(&e))
        })
        .collect();
    Polynomial::from_terms(ring, raw)
}

/// Random homogeneous polynomial of total degree `deg`.
pub fn random_homogeneous<K: Field>(rng: &mut ChaCha8Rng, ring: &Ring<K>, deg: u16, terms: usize, c: i64) -> Polynomial<K> {
    let n = ring.nvars();
    let k = ring.field();
    let raw = (0..terms)
        .map(|_| {
            let mut e = vec![0u16; n];
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            (k.from_i64(rng.gen_range(-c..=c)), Monomial::from_exponents(&e))
        })
        .collect();
    Polynomial::from_terms(ring, raw)
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u16) -> Vec<Monomial> {
    fn go(n: usize, d: u16, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}
