mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{build, monomials_of_degree, random_homogeneous, random_poly, raw_poly, ring, Q};
use unproj_core::arith::{Field, PrimeField, Rational, RationalField};
use unproj_core::groebner::{
    dimension, ideal_equal, ideal_membership, leading_term_ideal, min_hitting_set, normal_form, s_polynomial, Budget,
    GroebnerBasis, Ideal,
};
use unproj_core::ideal_ops::eliminate;
use unproj_core::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use unproj_core::Error;

fn capped() -> Budget {
    Budget::unlimited().with_max_pairs(4000)
}

fn gb_of(r: &Ring<Q>, gens: Vec<Polynomial<Q>>) -> Option<GroebnerBasis<Q>> {
    match Ideal::new(r, gens).unwrap().groebner_basis(&capped()) {
        Ok(g) => Some((*g).clone()),
        Err(Error::Timeout) => None,
        Err(e) => panic!("{e}"),
    }
}

fn assert_reduced<K: Field>(g: &GroebnerBasis<K>) {
    let lms = g.leading_monomials();
    for (i, p) in g.elements().iter().enumerate() {
        assert!(p.field().is_one(p.leading_coeff().unwrap()), "not monic: {p}");
        for t in p.terms() {
            for (j, m) in lms.iter().enumerate() {
                if i != j || t.monomial != *m {
                    assert!(!m.divides(&t.monomial), "{p} has a term divisible by lm of element {j}");
                }
            }
        }
    }
    for w in lms.windows(2) {
        assert!(g.order().compare(&w[0], &w[1]).is_lt(), "not sorted ascending");
    }
}

fn assert_groebner<K: Field>(g: &GroebnerBasis<K>, gens: &[Polynomial<K>]) {
    let els = g.elements();
    for f in gens {
        assert!(normal_form(f, els).is_zero(), "generator {f} does not reduce to 0");
    }
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            let s = s_polynomial(&els[i], &els[j]).unwrap();
            assert!(normal_form(&s, els).is_zero(), "S({i},{j}) does not reduce to 0");
        }
    }
}

fn strings<K: Field>(g: &GroebnerBasis<K>) -> Vec<String> {
    g.elements().iter().map(|p| p.to_string()).collect()
}

fn scalar<K: Field>(r: &Ring<K>, v: i64) -> Polynomial<K> {
    Polynomial::from_i64(r, v)
}

proptest! {
    #![proptest_config(common::config(96))]

    #[test]
    fn random_bases_are_reduced_groebner(
        a in raw_poly(3, 3, 3), b in raw_poly(3, 3, 3), c in raw_poly(3, 2, 3),
        lex in any::<bool>(),
    ) {
        let order = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        let r = ring(&["x", "y", "z"], order);
        let gens = vec![build(&r, &a), build(&r, &b), build(&r, &c)];
        let Some(g) = gb_of(&r, gens.clone()) else { return Ok(()) };
        assert_groebner(&g, &gens);
        assert_reduced(&g);
        for p in g.elements() {
            let ideal = Ideal::new(&r, gens.clone()).unwrap();
            prop_assert!(ideal_membership(p, &ideal, &capped()).unwrap());
        }
    }

    #[test]
    fn normal_form_is_linear_and_reduced(
        a in raw_poly(3, 3, 3), b in raw_poly(3, 3, 3),
        f in raw_poly(3, 4, 6), h in raw_poly(3, 4, 6), s in -5i64..=5, t in 1i64..=5,
    ) {
        let r = ring(&["x", "y", "z"], MonomialOrder::Grevlex);
        let Some(g) = gb_of(&r, vec![build(&r, &a), build(&r, &b)]) else { return Ok(()) };
        let (f, h) = (build(&r, &f), build(&r, &h));
        let (sp, tp) = (scalar(&r, s), scalar(&r, t));
        let lhs = g.normal_form(&(&(&sp * &f) + &(&tp * &h)));
        let rhs = &(&sp * &g.normal_form(&f)) + &(&tp * &g.normal_form(&h));
        prop_assert_eq!(lhs, rhs);
        let nf = g.normal_form(&f);
        prop_assert!(g.normal_form(&(&f - &nf)).is_zero());
        for term in nf.terms() {
            prop_assert!(g.leading_monomials().iter().all(|m| !m.divides(&term.monomial)));
        }
    }
}

#[test]
fn canonical_under_generator_shuffles() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
        let r = ring(&["x", "y", "z"], order);
        let mut here = 0;
        while here < 10 {
            let gens: Vec<_> = (0..3).map(|_| random_poly(&mut rng, &r, 3, 3, 4)).collect();
            let Some(reference) = gb_of(&r, gens.clone()) else { continue };
            let want = reference.elements().to_vec();
            for _ in 0..50 {
                let mut g = gens.clone();
                g.shuffle(&mut rng);
                for p in g.iter_mut() {
                    *p = &scalar(&r, rng.gen_range(1..=7) * if rng.gen() { 1 } else { -1 }) * p;
                }
                let (i, j) = (rng.gen_range(0..3), rng.gen_range(0..3));
                if i != j {
                    let mult = random_poly(&mut rng, &r, 1, 2, 3);
                    g[i] = &g[i] + &(&mult * &g[j]);
                }
                let got = gb_of(&r, g).expect("equal ideal stays within budget");
                assert_eq!(got.elements(), &want[..]);
            }
            here += 1;
            checked += 1;
        }
    }
    assert_eq!(checked, 20);
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for k in c..cols {
                    let d = &f * &rows[r][k];
                    rows[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

fn coeff_row(p: &Polynomial<Q>, basis: &[Monomial]) -> Vec<BigRational> {
    basis
        .iter()
        .map(|m| {
            p.terms().iter().find(|t| &t.monomial == m).map_or_else(BigRational::zero, |t| {
                BigRational::new(
                    t.coeff.numer().to_string().parse::<BigInt>().unwrap(),
                    t.coeff.denom().to_string().parse::<BigInt>().unwrap(),
                )
            })
        })
        .collect()
}

/// Membership of a homogeneous `f` in a homogeneous ideal by linear algebra
/// on all multiples of the generators up to degree `deg f + 2`.
fn macaulay_member(gens: &[Polynomial<Q>], f: &Polynomial<Q>) -> bool {
    let r = f.ring().clone();
    let n = r.nvars();
    let df = f.total_degree().unwrap() as u16;
    let mut cols = Vec::new();
    for d in 0..=df + 2 {
        cols.extend(monomials_of_degree(n, d));
    }
    let mut rows = Vec::new();
    for g in gens {
        let dg = g.total_degree().unwrap() as u16;
        for d in 0..=(df + 2).saturating_sub(dg) {
            if dg + d > df + 2 {
                continue;
            }
            for m in monomials_of_degree(n, d) {
                rows.push(coeff_row(&g.mul_term(&RationalField.one(), &m), &cols));
            }
        }
    }
    let base = rank(rows.clone());
    rows.push(coeff_row(f, &cols));
    rank(rows) == base
}

#[test]
fn membership_agrees_with_macaulay_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut members, mut total) = (0, 0);
    while total < 100 {
        let nv = rng.gen_range(2..=3);
        let names = ["x", "y", "z"];
        let r = ring(&names[..nv], MonomialOrder::Grevlex);
        let gens: Vec<_> = (0..rng.gen_range(1..=3))
            .map(|_| {
                let d = rng.gen_range(1..=3);
                random_homogeneous(&mut rng, &r, d, 3, 4)
            })
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let df = rng.gen_range(2..=4u16);
        let f = if rng.gen() {
            let mut acc = Polynomial::zero(&r);
            for g in &gens {
                let dg = g.total_degree().unwrap() as u16;
                if dg <= df {
                    acc = &acc + &(&random_homogeneous(&mut rng, &r, df - dg, 2, 3) * g);
                }
            }
            acc
        } else {
            random_homogeneous(&mut rng, &r, df, 4, 5)
        };
        if f.is_zero() {
            continue;
        }
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let ours = ideal_membership(&f, &ideal, &Budget::unlimited()).unwrap();
        let oracle = macaulay_member(&gens, &f);
        assert_eq!(ours, oracle, "membership of {f} in {gens:?}");
        members += ours as usize;
        total += 1;
    }
    assert!(members > 20 && members < 90, "degenerate sample: {members} members");
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
}

fn brute_force_dimension(r: &Ring<Q>, gens: &[Polynomial<Q>]) -> i64 {
    let ideal = Ideal::new(r, gens.to_vec()).unwrap();
    if ideal.is_unit(&Budget::unlimited()).unwrap() {
        return -1;
    }
    let names = r.variables();
    subsets(r.nvars())
        .filter(|s| {
            let elim: Vec<&str> = (0..r.nvars()).filter(|i| !s.contains(i)).map(|i| names[i].as_str()).collect();
            if elim.is_empty() {
                return ideal.generators().is_empty();
            }
            eliminate(&ideal, &elim, &Budget::unlimited()).unwrap().generators().is_empty()
        })
        .map(|s| s.len() as i64)
        .max()
        .unwrap_or(-1)
}

#[test]
fn dimension_matches_independent_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let r = ring(&["x", "y", "z", "w"], MonomialOrder::Grevlex);
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..40 {
        let k = rng.gen_range(0..=3);
        let gens: Vec<_> = (0..k)
            .map(|_| {
                let t = rng.gen_range(1..=2);
                random_poly(&mut rng, &r, 2, t, 3)
            })
            .collect();
        let ideal = Ideal::new(&r, gens.clone()).unwrap();
        let d = dimension(&ideal, &Budget::unlimited()).unwrap();
        assert_eq!(d, brute_force_dimension(&r, &gens), "{gens:?}");
        let lt = leading_term_ideal(&ideal, &Budget::unlimited()).unwrap();
        assert_eq!(dimension(&lt, &Budget::unlimited()).unwrap(), d);
        let extra = random_poly(&mut rng, &r, 2, 2, 3);
        let bigger = ideal.sum(&Ideal::new(&r, vec![extra]).unwrap()).unwrap();
        assert!(dimension(&bigger, &Budget::unlimited()).unwrap() <= d);
        seen.insert(d);
    }
    assert!(seen.len() >= 3, "dimensions seen: {seen:?}");
}

proptest! {
    #![proptest_config(common::config(200))]

    #[test]
    fn hitting_set_matches_enumeration(sets in prop::collection::vec(prop::collection::btree_set(0usize..6, 1..=3), 0..6)) {
        let sets: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let brute = subsets(6)
            .filter(|h| sets.iter().all(|s| s.iter().any(|v| h.contains(v))))
            .map(|h| h.len())
            .min()
            .unwrap();
        prop_assert_eq!(min_hitting_set(6, &sets), brute);
    }
}

fn xyz(order: MonomialOrder) -> (Ring<Q>, Polynomial<Q>, Polynomial<Q>, Polynomial<Q>) {
    let r = ring(&["x", "y", "z"], order);
    let (x, y, z) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1), Polynomial::var(&r, 2));
    (r, x, y, z)
}

#[test]
fn frozen_reference_bases() {
    let one = |r: &Ring<Q>| Polynomial::one(r);
    for (order, want) in [
        (MonomialOrder::Lex, vec!["y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"]),
        (MonomialOrder::Grevlex, vec!["x^2 - y", "y^2 - x*z", "x*y - z"]),
    ] {
        let (r, x, y, z) = xyz(order);
        let g = gb_of(&r, vec![&(&x * &x) - &y, &x.pow(3) - &z]).unwrap();
        let mut got = strings(&g);
        let mut want: Vec<String> = want.into_iter().map(String::from).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }
    for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
        let (r, x, y, z) = xyz(order);
        let e1 = &(&x + &y) + &z;
        let e2 = &(&(&x * &y) + &(&y * &z)) + &(&z * &x);
        let e3 = &(&(&x * &y) * &z) - &one(&r);
        let mut got = strings(&gb_of(&r, vec![e1, e2, e3]).unwrap());
        got.sort();
        assert_eq!(got, ["x + y + z", "y^2 + y*z + z^2", "z^3 - 1"]);
    }
    let r = ring(&["x", "y"], MonomialOrder::Grevlex);
    let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
    let half = Polynomial::constant(&r, Rational::new(1.into(), 2.into()).unwrap());
    let g = gb_of(&r, vec![&(&(&x * &x) + &(&y * &y)) - &one(&r), &(&x * &y) - &half]).unwrap();
    let mut got = strings(&g);
    got.sort();
    assert_eq!(got, ["x*y - 1/2", "x^2 + y^2 - 1", "y^3 + 1/2*x - y"]);

    let r = ring(&["x", "y"], MonomialOrder::Lex);
    let (x, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
    let c = |v: i64| scalar(&r, v);
    let x2 = &x * &x;
    let x3 = &x2 * &x;
    let f1 = [&(&c(3) * &x2) * &y, &(&c(2) * &x) * &y, y.clone(), &c(9) * &x2, &c(5) * &x, c(-3)];
    let f2 = [&(&c(2) * &x3) * &y, -&(&x * &y), -y.clone(), &c(6) * &x3, &c(-2) * &x2, &c(-3) * &x, c(3)];
    let f3 = [&x3 * &y, &x2 * &y, &c(3) * &x3, &c(2) * &x2];
    let sum = |ts: &[Polynomial<Q>]| ts.iter().fold(Polynomial::zero(&r), |a, t| &a + t);
    let g = gb_of(&r, vec![sum(&f1), sum(&f2), sum(&f3)]).unwrap();
    assert_eq!(strings(&g), ["y^3 - 3/2*y^2 - 8*y + 21/2", "x - 1/4*y^2 + 5/8*y + 3/8"]);
}

#[test]
fn unit_and_zero_ideals() {
    let (r, x, _, _) = xyz(MonomialOrder::Grevlex);
    let g = gb_of(&r, vec![&x * &x, &x - &Polynomial::one(&r)]).unwrap();
    assert!(g.is_unit());
    assert_eq!(strings(&g), ["1"]);
    let z = Ideal::zero(&r);
    assert!(z.groebner_basis(&Budget::unlimited()).unwrap().is_empty());
    assert_eq!(dimension(&z, &Budget::unlimited()).unwrap(), 3);
    assert_eq!(dimension(&Ideal::unit(&r), &Budget::unlimited()).unwrap(), -1);
}

#[test]
fn small_budgets_time_out_or_agree() {
    let (r, x, y, z) = xyz(MonomialOrder::Lex);
    let gens = vec![&(&x * &x) - &y, &x.pow(3) - &z, &(&y * &z) - &x];
    let full = gb_of(&r, gens.clone()).unwrap();
    for k in 0..40 {
        match Ideal::new(&r, gens.clone()).unwrap().groebner_basis(&Budget::unlimited().with_max_pairs(k)) {
            Ok(g) => assert_eq!(g.elements(), full.elements()),
            Err(e) => assert!(matches!(e, Error::Timeout)),
        }
    }
}

#[test]
fn rational_and_modular_bases_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let fp = PrimeField::new(65521).unwrap();
    for _ in 0..25 {
        let r = ring(&["x", "y", "z"], MonomialOrder::Grevlex);
        let rp = r.with_field(fp);
        let gens: Vec<_> = (0..3).map(|_| random_poly(&mut rng, &r, 2, 3, 5)).collect();
        let Some(gq) = gb_of(&r, gens.clone()) else { continue };
        let gens_p: Vec<_> =
            gens.iter().map(|g| g.map_field(&rp, |c| fp.from_rational(c)).unwrap()).collect();
        let gp = Ideal::new(&rp, gens_p).unwrap().groebner_basis(&Budget::unlimited()).unwrap();
        let reduced: Vec<_> = gq.elements().iter().map(|g| g.map_field(&rp, |c| fp.from_rational(c)).unwrap()).collect();
        assert_eq!(gp.elements(), &reduced[..]);
    }
}

#[test]
fn ideal_equality_ignores_presentation() {
    let (r, x, y, _) = xyz(MonomialOrder::Grevlex);
    let a = Ideal::new(&r, vec![&x * &y, &x + &y]).unwrap();
    let b = Ideal::new(&r, vec![&x + &y, &y * &y]).unwrap();
    let c = Ideal::new(&r, vec![&x + &y]).unwrap();
    assert!(ideal_equal(&a, &b, &Budget::unlimited()).unwrap());
    assert!(!ideal_equal(&a, &c, &Budget::unlimited()).unwrap());
}
