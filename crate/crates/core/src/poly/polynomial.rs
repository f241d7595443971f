use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::ops::{Add, Mul, Neg, Sub};

use super::monomial::{Exponent, Monomial};
use super::order::MonomialOrder;
use super::ring::{Ring, RingContext};
use crate::arith::Field;
use crate::{Error, Result};

/// `coeff * monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term<K: Field> {
    pub coeff: K::Elem,
    pub monomial: Monomial,
}

impl<K: Field> Hash for Term<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeff.hash(state);
        self.monomial.hash(state);
    }
}

/// Sparse polynomial in canonical form: nonzero coefficients, distinct
/// monomials, terms sorted descending by the ring's order.
#[derive(Clone)]
pub struct Polynomial<K: Field> {
    ring: Ring<K>,
    terms: Vec<Term<K>>,
}

pub(crate) fn same_ring<K: Field>(a: &Ring<K>, b: &Ring<K>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn check_ring<K: Field>(a: &Ring<K>, b: &Ring<K>) {
    assert!(same_ring(a, b), "polynomial arithmetic across different rings");
}

/// `a - c * m * b` for descending term lists `a`, `b`.
pub(crate) fn sub_mul_merge<K: Field>(
    field: &K,
    order: &MonomialOrder,
    a: impl IntoIterator<Item = Term<K>>,
    c: &K::Elem,
    m: &Monomial,
    b: &[Term<K>],
    out: &mut Vec<Term<K>>,
) {
    let mut a = a.into_iter().peekable();
    let mut bi = b.iter().map(|t| (t, t.monomial.mul(m))).peekable();
    loop {
        let ord = match (a.peek(), bi.peek()) {
            (Some(x), Some((_, mb))) => order.compare(&x.monomial, mb),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => out.push(a.next().unwrap()),
            Ordering::Less => {
                let (t, mb) = bi.next().unwrap();
                out.push(Term { coeff: field.neg(&field.mul(c, &t.coeff)), monomial: mb });
            }
            Ordering::Equal => {
                let x = a.next().unwrap();
                let (t, _) = bi.next().unwrap();
                let v = field.sub(&x.coeff, &field.mul(c, &t.coeff));
                if !field.is_zero(&v) {
                    out.push(Term { coeff: v, monomial: x.monomial });
                }
            }
        }
    }
}

impl<K: Field> Polynomial<K> {
    pub fn zero(ring: &Ring<K>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring<K>, c: K::Elem) -> Self {
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn from_i64(ring: &Ring<K>, v: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(v))
    }

    pub fn one(ring: &Ring<K>) -> Self {
        Self::from_i64(ring, 1)
    }

    pub fn var(ring: &Ring<K>, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        Self::monomial(ring, ring.field().one(), Monomial::variable(ring.nvars(), index))
    }

    pub fn var_named(ring: &Ring<K>, name: &str) -> Result<Self> {
        Ok(Self::var(ring, ring.require_var(name)?))
    }

    pub fn monomial(ring: &Ring<K>, coeff: K::Elem, monomial: Monomial) -> Self {
        assert_eq!(monomial.nvars(), ring.nvars());
        let terms = if ring.field().is_zero(&coeff) { Vec::new() } else { alloc::vec![Term { coeff, monomial }] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Canonicalizes an arbitrary term list.
    pub fn from_terms(ring: &Ring<K>, mut raw: Vec<(K::Elem, Monomial)>) -> Self {
        let field = ring.field();
        let order = ring.order();
        raw.sort_by(|a, b| order.compare(&b.1, &a.1));
        let mut terms: Vec<Term<K>> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match terms.last_mut() {
                Some(last) if last.monomial == m => last.coeff = field.add(&last.coeff, &c),
                _ => {
                    if let Some(last) = terms.last() {
                        if field.is_zero(&last.coeff) {
                            terms.pop();
                        }
                    }
                    terms.push(Term { coeff: c, monomial: m });
                }
            }
        }
        if let Some(last) = terms.last() {
            if field.is_zero(&last.coeff) {
                terms.pop();
            }
        }
        Polynomial { ring: ring.clone(), terms }
    }

    /// Caller guarantees canonical form.
    pub(crate) fn from_canonical(ring: &Ring<K>, terms: Vec<Term<K>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().compare(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !ring.field().is_zero(&t.coeff)));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring<K> {
        &self.ring
    }

    pub fn field(&self) -> &K {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term<K>] {
        &self.terms
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one() && self.field().is_one(&self.terms[0].coeff)
    }

    pub fn leading_term(&self) -> Option<&Term<K>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&K::Elem> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.weighted_degree(weights)).max()
    }

    pub fn degree_in(&self, var: usize) -> Exponent {
        self.terms.iter().map(|t| t.monomial.exponent(var)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.monomial.exponent(var) > 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let one = self.field().one();
        self.sub_scaled(&self.field().neg(&one), &Monomial::one(self.ring.nvars()), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.sub_scaled(&self.field().one(), &Monomial::one(self.ring.nvars()), other)
    }

    /// `self - c * m * other`.
    pub fn sub_scaled(&self, c: &K::Elem, m: &Monomial, other: &Self) -> Self {
        check_ring(&self.ring, &other.ring);
        if self.field().is_zero(c) {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        sub_mul_merge(self.field(), self.ring.order(), self.terms.iter().cloned(), c, m, &other.terms, &mut out);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        let f = self.field();
        let terms = self.terms.iter().map(|t| Term { coeff: f.neg(&t.coeff), monomial: t.monomial.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let f = self.field();
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|t| Term { coeff: f.mul(&t.coeff, c), monomial: t.monomial.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`; multiplying by a monomial preserves term order.
    pub fn mul_term(&self, c: &K::Elem, m: &Monomial) -> Self {
        let f = self.field();
        if f.is_zero(c) {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term { coeff: f.mul(&t.coeff, c), monomial: t.monomial.mul(m) })
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        check_ring(&self.ring, &other.ring);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].coeff, &self.terms[0].monomial);
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].coeff, &other.terms[0].monomial);
        }
        let f = self.field();
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                raw.push((f.mul(&a.coeff, &b.coeff), a.monomial.mul(&b.monomial)));
            }
        }
        Self::from_terms(&self.ring, raw)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.field().is_one(lc) => self.clone(),
            Some(lc) => self.scale(&self.field().inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Splits into weighted-homogeneous components keyed by degree.
    pub fn weighted_components(&self, grading: &[u32]) -> BTreeMap<u64, Self> {
        let mut parts: BTreeMap<u64, Vec<Term<K>>> = BTreeMap::new();
        for t in &self.terms {
            parts.entry(t.monomial.weighted_degree(grading)).or_default().push(t.clone());
        }
        parts.into_iter().map(|(d, terms)| (d, Polynomial { ring: self.ring.clone(), terms })).collect()
    }

    pub fn is_homogeneous(&self, grading: &[u32]) -> bool {
        let mut degs = self.terms.iter().map(|t| t.monomial.weighted_degree(grading));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// `hvar^d * self(x / hvar)`: each term is multiplied by `hvar` raised to
    /// `d` minus its degree. Degrees use the ring grading when present (the
    /// homogenizing variable must then have weight 1), otherwise total degree.
    pub fn homogenize(&self, hvar: usize, d: u64) -> Result<Self> {
        let n = self.ring.nvars();
        if hvar >= n {
            return Err(Error::InvalidArgument(format!("variable index {hvar} out of range")));
        }
        let ones;
        let weights = match self.ring.grading() {
            Some(w) => {
                if w[hvar] != 1 {
                    return Err(Error::InvalidArgument(format!(
                        "homogenizing variable `{}` must have weight 1",
                        self.ring.variables()[hvar]
                    )));
                }
                w
            }
            None => {
                ones = alloc::vec![1u32; n];
                &ones[..]
            }
        };
        if self.uses_var(hvar) {
            return Err(Error::InvalidArgument(format!(
                "polynomial already involves `{}`",
                self.ring.variables()[hvar]
            )));
        }
        let top = self.weighted_degree(weights).unwrap_or(0);
        if top > d {
            return Err(Error::DegreeTooSmall { bound: d, degree: top });
        }
        let raw = self
            .terms
            .iter()
            .map(|t| {
                let mut m = t.monomial.clone();
                let e = d - t.monomial.weighted_degree(weights);
                m.set_exponent(hvar, Exponent::try_from(e).expect("exponent overflow"));
                (t.coeff.clone(), m)
            })
            .collect();
        Ok(Self::from_terms(&self.ring, raw))
    }

    /// Ring homomorphism image: variable `i` is replaced by `images[i]`, all
    /// images living in `target`.
    pub fn compose(&self, target: &Ring<K>, images: &[Polynomial<K>]) -> Self {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let mut powers: Vec<Vec<Polynomial<K>>> = images.iter().map(|p| alloc::vec![Self::one(target), p.clone()]).collect();
        let mut raw = Vec::new();
        for t in &self.terms {
            let mut acc = Self::constant(target, t.coeff.clone());
            for (i, &e) in t.monomial.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&powers[i][1]);
                    powers[i].push(next);
                }
                acc = &acc * &powers[i][e];
            }
            raw.extend(acc.terms.into_iter().map(|t| (t.coeff, t.monomial)));
        }
        Self::from_terms(target, raw)
    }

    /// Moves into `target`, sending variable `i` to position `map[i]`.
    pub fn remap(&self, target: &Ring<K>, map: &[Option<usize>]) -> Result<Self> {
        let mut raw = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let m = t.monomial.remap(map, target.nvars()).ok_or_else(|| {
                let var = t.monomial.support().find(|&i| map[i].is_none()).unwrap_or(0);
                Error::UnknownVariable(self.ring.variables()[var].clone())
            })?;
            raw.push((t.coeff.clone(), m));
        }
        Ok(Self::from_terms(target, raw))
    }

    /// Moves into a ring over the same field, matching variables by name.
    pub fn to_ring(&self, target: &Ring<K>) -> Result<Self> {
        if same_ring(&self.ring, target) {
            return Ok(Polynomial { ring: target.clone(), terms: self.terms.clone() });
        }
        let map: Vec<Option<usize>> = self.ring.variables().iter().map(|v| target.var_index(v)).collect();
        self.remap(target, &map)
    }

    /// Applies `f` to every coefficient, landing in a ring over another field
    /// with the same variables.
    pub fn map_field<L: Field>(
        &self,
        target: &Ring<L>,
        mut f: impl FnMut(&K::Elem) -> Result<L::Elem>,
    ) -> Result<Polynomial<L>> {
        if !super::ring::same_shape(&self.ring, target) {
            return Err(Error::RingMismatch);
        }
        let mut raw = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            raw.push((f(&t.coeff)?, t.monomial.clone()));
        }
        Ok(Polynomial::from_terms(target, raw))
    }

    /// Exact quotient `self / g`; fails if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Self) -> Result<Self> {
        check_ring(&self.ring, &g.ring);
        let lt = g.leading_term().ok_or(Error::ZeroPolynomial)?;
        let f = self.field();
        let lc_inv = f.inv(&lt.coeff)?;
        let order = self.ring.order();
        let mut rest = self.terms.clone();
        let mut quotient = Vec::new();
        let mut scratch = Vec::new();
        while let Some(head) = rest.first() {
            let m = lt.monomial.quotient_of(&head.monomial).ok_or(Error::InexactDivision)?;
            let c = f.mul(&head.coeff, &lc_inv);
            scratch.clear();
            sub_mul_merge(f, order, rest.drain(1..), &c, &m, &g.terms[1..], &mut scratch);
            core::mem::swap(&mut rest, &mut scratch);
            quotient.push(Term { coeff: c, monomial: m });
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: quotient })
    }

    /// Variables occurring in some term.
    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.ring.nvars()).filter(|&v| self.uses_var(v)).collect()
    }
}

/// Polynomial ring operation dispatcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp<'a, K: Field> {
    Add,
    Sub,
    Mul,
    Scale(&'a K::Elem),
}

/// `f op g`; for `Scale(c)` the second operand is ignored.
pub fn poly_arith<K: Field>(f: &Polynomial<K>, g: &Polynomial<K>, op: PolyOp<'_, K>) -> Polynomial<K> {
    match op {
        PolyOp::Add => f.add(g),
        PolyOp::Sub => f.sub(g),
        PolyOp::Mul => f.mul(g),
        PolyOp::Scale(c) => f.scale(c),
    }
}

/// Weighted-homogeneous decomposition of `f`.
pub fn weighted_components<K: Field>(f: &Polynomial<K>, grading: &[u32]) -> BTreeMap<u64, Polynomial<K>> {
    f.weighted_components(grading)
}

/// `hvar^d * h(x / hvar)`.
pub fn homogenize<K: Field>(h: &Polynomial<K>, hvar: usize, d: u64) -> Result<Polynomial<K>> {
    h.homogenize(hvar, d)
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<K: Field> Eq for Polynomial<K> {}

impl<K: Field> Hash for Polynomial<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl<K: Field> $tr for &Polynomial<K> {
            type Output = Polynomial<K>;
            fn $m(self, rhs: &Polynomial<K>) -> Polynomial<K> {
                Polynomial::$m(self, rhs)
            }
        }
        impl<K: Field> $tr for Polynomial<K> {
            type Output = Polynomial<K>;
            fn $m(self, rhs: Polynomial<K>) -> Polynomial<K> {
                Polynomial::$m(&self, &rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl<K: Field> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial::neg(self)
    }
}

impl<K: Field> Neg for Polynomial<K> {
    type Output = Polynomial<K>;
    fn neg(self) -> Polynomial<K> {
        Polynomial::neg(&self)
    }
}

pub(crate) fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[alloc::string::String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text: descending terms, signs folded into the joins, unit
/// coefficients suppressed, e.g. `x^2 - 3/2*x*y + 1`.
impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.field();
        for (i, t) in self.terms.iter().enumerate() {
            let c = field.to_rational(&t.coeff);
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if t.monomial.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, self.ring.variables(), &t.monomial)?;
            }
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<K: Field> RingContext<K> {
    /// All variables as polynomials, in ring order.
    pub fn gens(self: &Arc<Self>) -> Vec<Polynomial<K>> {
        (0..self.nvars()).map(|i| Polynomial::var(self, i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Rational, RationalField};
    use crate::poly::ring::make_ring;
    use alloc::string::ToString;

    fn xy(order: MonomialOrder) -> (Ring<RationalField>, Polynomial<RationalField>, Polynomial<RationalField>) {
        let r = make_ring(RationalField, &["x", "y"], order, None).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        (r, x, y)
    }

    #[test]
    fn arithmetic_examples() {
        let (r, x, y) = xy(MonomialOrder::Grevlex);
        assert_eq!(((&x + &y) * (&x - &y)).to_string(), "x^2 - y^2");
        assert_eq!(&x + &Polynomial::zero(&r), x);
        let one = Polynomial::one(&r);
        assert_eq!(((&x + &one) * (&x + &one)).to_string(), "x^2 + 2*x + 1");
        assert_eq!((&x - &x).to_string(), "0");
        let half = r.field().from_rational(&Rational::new(1.into(), 2.into()).unwrap()).unwrap();
        assert_eq!(poly_arith(&x, &x, PolyOp::Scale(&half)).to_string(), "1/2*x");
        assert_eq!((-(&x * &y)).to_string(), "-x*y");
    }

    #[test]
    fn components_examples() {
        let r = make_ring(RationalField, &["a", "T"], MonomialOrder::Grevlex, Some(alloc::vec![0, 1])).unwrap();
        let a = Polynomial::var(&r, 0);
        let t = Polynomial::var(&r, 1);
        let f = &(&a + &(&a * &t)) + &(&t * &t);
        let parts = weighted_components(&f, &[0, 1]);
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[&0], a);
        assert_eq!(parts[&1], &a * &t);
        assert_eq!(parts[&2], &t * &t);
        assert!(weighted_components(&Polynomial::zero(&r), &[0, 1]).is_empty());
        assert_eq!(weighted_components(&t, &[0, 1]).len(), 1);
    }

    #[test]
    fn homogenize_examples() {
        let r = make_ring(
            RationalField,
            &["a11", "a12", "T1", "T2"],
            MonomialOrder::Grevlex,
            Some(alloc::vec![0, 0, 1, 1]),
        )
        .unwrap();
        let v = r.gens();
        let h = &v[0] + &(&v[1] * &v[3]);
        assert_eq!(homogenize(&h, 2, 1).unwrap(), &(&v[0] * &v[2]) + &(&v[1] * &v[3]));
        assert_eq!(homogenize(&v[3], 2, 1).unwrap(), v[3]);
        let t2sq = &v[3] * &v[3];
        assert_eq!(homogenize(&t2sq, 2, 2).unwrap(), t2sq);
        assert!(matches!(homogenize(&t2sq, 2, 1), Err(Error::DegreeTooSmall { .. })));
        assert!(homogenize(&v[2], 2, 3).is_err());
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = xy(MonomialOrder::Lex);
        let p = (&x + &y) * (&x - &y);
        assert_eq!(p.div_exact(&(&x + &y)).unwrap(), &x - &y);
        assert_eq!(p.div_exact(&x), Err(Error::InexactDivision));
    }

    #[test]
    fn compose_substitutes() {
        let (r, x, y) = xy(MonomialOrder::Lex);
        let f = &(&x * &x) - &y;
        // x -> y + 1, y -> x
        let img = [&y + &Polynomial::one(&r), x.clone()];
        assert_eq!(f.compose(&r, &img).to_string(), "-x + y^2 + 2*y + 1");
    }
}
