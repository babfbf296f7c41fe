//! The Laurent ring `E = R[l1^±1, l2^±1]`, its symmetric subring
//! `E' = R[l1 + l2, (l1 l2)^±1]`, and the distinguished power-sum elements.
//!
//! `bold_x(i)` and `bold_y(i)` model the traces of the `i`-th power of a
//! torus element acting on the 7- and 14-dimensional fundamental
//! representations of G2: each is the sum of the `i`-th powers of the
//! weights.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::qscalar::{Coeff, Field, Ring};
use crate::text;

/// Exponent pair `(i, j)` of `l1^i l2^j`.
pub type Bidegree = (i64, i64);

/// A Laurent polynomial in `l1`, `l2`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LLPoly<C> {
    terms: BTreeMap<Bidegree, C>,
}

impl<C: Coeff> LLPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(c: C, i: i64, j: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (Bidegree, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Adds `c * l1^i l2^j` in place.
    pub fn add_term(&mut self, key: Bidegree, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: i64, j: i64) -> Option<&C> {
        self.terms.get(&(i, j))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Bidegree, &C)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.neg());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c.mul(d));
            }
        }
        out
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(key, c)| (*key, c.mul(k))))
    }

    pub fn pow<R: Ring<Elem = C>>(&self, ring: &R, n: u32) -> Self {
        let mut acc = Self::constant(ring.one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The swap `l1 <-> l2`.
    pub fn swap(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((i, j), c)| ((*j, *i), c.clone()))
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|((i, j), c)| self.terms.get(&(*j, *i)) == Some(c))
    }

    /// The endomorphism `l1 -> l1^k, l2 -> l2^k`.
    pub fn phi(&self, k: i64) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|((i, j), c)| ((i * k, j * k), c.clone())),
        )
    }

    /// The lexicographically largest monomial and its coefficient.
    pub fn top_term(&self) -> Option<(Bidegree, &C)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    /// Lexicographic maximum of the exponent pairs.
    pub fn d2(&self) -> Result<Bidegree> {
        self.top_term().map(|(k, _)| k).ok_or(Error::ZeroPolynomial)
    }

    /// Total degree of the top monomial (for homogeneous input this is the
    /// common degree of every term).
    pub fn d1(&self) -> Result<i64> {
        self.d2().map(|(i, j)| i + j)
    }

    /// True when every monomial has total degree `k`.
    pub fn is_homogeneous_of_degree(&self, k: i64) -> bool {
        self.terms.keys().all(|(i, j)| i + j == k)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LLPoly<D> {
        LLPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    /// Parses `c*l1^i*l2^j` sums with coefficients in `ring`.
    pub fn parse<R: Ring<Elem = C>>(ring: &R, s: &str) -> std::result::Result<Self, ParseError> {
        let mut out = Self::zero();
        for (neg, term) in text::split_terms(s)? {
            let mut coef = ring.one();
            let (mut i, mut j) = (0i64, 0i64);
            for factor in text::split_factors(&term) {
                if let Some(e) = text::parse_power(&factor, "l1") {
                    i += e?;
                } else if let Some(e) = text::parse_power(&factor, "l2") {
                    j += e?;
                } else {
                    coef = coef.mul(&ring.parse_elem(&factor)?);
                }
            }
            out.add_term((i, j), if neg { coef.neg() } else { coef });
        }
        Ok(out)
    }
}

impl<C: Coeff> fmt::Display for LLPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = text::write_sum(self.terms.iter().rev().map(|((i, j), c)| {
            let l1 = text::fmt_power("l1", *i);
            let l2 = text::fmt_power("l2", *j);
            (
                c.to_string(),
                c.is_one(),
                c.is_minus_one(),
                text::join_factors([l1.as_str(), l2.as_str()]),
            )
        }));
        f.write_str(&s)
    }
}

impl<C: Coeff> fmt::Debug for LLPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LLPoly({self})")
    }
}

/// An element of `E'`, stored in the basis `(l1 + l2)^i (l1 l2)^j`
/// with `i >= 0` and `j` any integer.
#[derive(Clone, PartialEq, Eq)]
pub struct EPrimePoly<C> {
    terms: BTreeMap<(u32, i64), C>,
}

impl<C: Coeff> EPrimePoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// `c * (l1 + l2)^i (l1 l2)^j`.
    pub fn monomial(c: C, i: u32, j: i64) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn add_term(&mut self, key: (u32, i64), c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&key) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, i64), &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: i64) -> Option<&C> {
        self.terms.get(&(i, j))
    }

    /// Expands back into `E`.
    pub fn expand<R: Ring<Elem = C>>(&self, ring: &R) -> LLPoly<C> {
        let mut out = LLPoly::zero();
        for ((i, j), c) in &self.terms {
            let binom = binomial_row(*i);
            for (k, b) in binom.iter().enumerate() {
                let coef = c.mul(&ring.from_bigint(b));
                out.add_term((k as i64 + j, *i as i64 - k as i64 + j), coef);
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for EPrimePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = text::write_sum(self.terms.iter().rev().map(|((i, j), c)| {
            let sum = match i {
                0 => String::new(),
                1 => "(l1 + l2)".to_string(),
                i => format!("(l1 + l2)^{i}"),
            };
            let prod = match j {
                0 => String::new(),
                1 => "(l1*l2)".to_string(),
                j => format!("(l1*l2)^{j}"),
            };
            (
                c.to_string(),
                c.is_one(),
                c.is_minus_one(),
                text::join_factors([sum.as_str(), prod.as_str()]),
            )
        }));
        f.write_str(&s)
    }
}

impl<C: Coeff> fmt::Debug for EPrimePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EPrimePoly({self})")
    }
}

fn binomial_row(n: u32) -> Vec<num_bigint::BigInt> {
    let mut row = vec![num_bigint::BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![num_bigint::BigInt::from(1); row.len() + 1];
        for k in 1..row.len() {
            next[k] = &row[k - 1] + &row[k];
        }
        row = next;
    }
    row
}

/// Rewrites a symmetric Laurent polynomial in the `E'` basis.
///
/// Repeatedly peels off the lexicographically top monomial `l1^m l2^n`
/// (where `m >= n` by symmetry) as `c (l1 + l2)^(m-n) (l1 l2)^n`. Each step
/// strictly lowers the top bidegree, and the loop stays inside the finite
/// box spanned by the input's exponents.
pub fn to_eprime<R: Ring>(ring: &R, p: &LLPoly<R::Elem>) -> Result<EPrimePoly<R::Elem>> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut rest = p.clone();
    let mut out = EPrimePoly::zero();
    while let Some(((m, n), c)) = rest.top_term() {
        debug_assert!(m >= n);
        let c = c.clone();
        let piece = EPrimePoly::monomial(c.clone(), (m - n) as u32, n);
        rest = rest.sub(&piece.expand(ring));
        out.add_term(((m - n) as u32, n), c);
    }
    Ok(out)
}

/// Exponents of the seven summands of `bold_x(i)`.
pub fn bold_x_terms(i: i64) -> Vec<Bidegree> {
    vec![
        (i, 0),
        (0, i),
        (i, i),
        (0, 0),
        (-i, -i),
        (0, -i),
        (-i, 0),
    ]
}

/// Exponents of the fourteen summands of `bold_y(i)`, including the two
/// copies of `1`.
pub fn bold_y_terms(i: i64) -> Vec<Bidegree> {
    vec![
        (2 * i, i),
        (i, 2 * i),
        (i, i),
        (i, 0),
        (0, i),
        (i, -i),
        (0, 0),
        (0, 0),
        (-i, i),
        (0, -i),
        (-i, 0),
        (-i, -i),
        (-i, -2 * i),
        (-2 * i, -i),
    ]
}

fn monomials<R: Ring>(ring: &R, exps: &[Bidegree]) -> Vec<LLPoly<R::Elem>> {
    exps.iter()
        .map(|&(i, j)| LLPoly::monomial(ring.one(), i, j))
        .collect()
}

fn sum_of_monomials<R: Ring>(ring: &R, exps: &[Bidegree]) -> LLPoly<R::Elem> {
    LLPoly::from_terms(exps.iter().map(|&k| (k, ring.one())))
}

/// The summands of `bold_x(1)` as monomials.
pub fn x_summands<R: Ring>(ring: &R) -> Vec<LLPoly<R::Elem>> {
    monomials(ring, &bold_x_terms(1))
}

/// The summands of `bold_y(1)` as monomials.
pub fn y_summands<R: Ring>(ring: &R) -> Vec<LLPoly<R::Elem>> {
    monomials(ring, &bold_y_terms(1))
}

pub fn bold_x<R: Ring>(ring: &R, i: u32) -> LLPoly<R::Elem> {
    sum_of_monomials(ring, &bold_x_terms(i as i64))
}

pub fn bold_y<R: Ring>(ring: &R, i: u32) -> LLPoly<R::Elem> {
    sum_of_monomials(ring, &bold_y_terms(i as i64))
}

fn weighted<F: Field>(field: &F, weighted: &[(i64, Bidegree)]) -> LLPoly<F::Elem> {
    LLPoly::from_terms(weighted.iter().map(|&(w, k)| (k, field.q_pow(w))))
}

/// `q^(2i)(l1^i + l2^i) + q^(-2i)(l1^-i + l2^-i) + q^(4i)(l1 l2)^i + q^(-4i)(l1 l2)^-i + 1`.
pub fn tilde_x<F: Field>(field: &F, i: u32) -> LLPoly<F::Elem> {
    let i = i as i64;
    weighted(
        field,
        &[
            (2 * i, (i, 0)),
            (2 * i, (0, i)),
            (-2 * i, (-i, 0)),
            (-2 * i, (0, -i)),
            (4 * i, (i, i)),
            (-4 * i, (-i, -i)),
            (0, (0, 0)),
        ],
    )
}

/// The `q`-weighted analogue of `bold_y(j)`.
pub fn tilde_y<F: Field>(field: &F, j: u32) -> LLPoly<F::Elem> {
    let j = j as i64;
    weighted(
        field,
        &[
            (6 * j, (2 * j, j)),
            (6 * j, (j, 2 * j)),
            (4 * j, (j, j)),
            (2 * j, (j, 0)),
            (2 * j, (0, j)),
            (0, (j, -j)),
            (0, (-j, j)),
            (0, (0, 0)),
            (0, (0, 0)),
            (-2 * j, (0, -j)),
            (-2 * j, (-j, 0)),
            (-4 * j, (-j, -j)),
            (-6 * j, (-j, -2 * j)),
            (-6 * j, (-2 * j, -j)),
        ],
    )
}

/// The `i`-th elementary symmetric sum of `terms`.
pub fn elementary_symmetric<R: Ring>(
    ring: &R,
    terms: &[LLPoly<R::Elem>],
    i: usize,
) -> Result<LLPoly<R::Elem>> {
    Ok(elementary_symmetric_all(ring, terms)
        .into_iter()
        .nth(i)
        .ok_or(Error::IndexOutOfRange {
            index: i as i64,
            max: terms.len() as i64,
        })?)
}

/// All elementary symmetric sums `e_0, ..., e_s` of `terms`.
pub fn elementary_symmetric_all<R: Ring>(ring: &R, terms: &[LLPoly<R::Elem>]) -> Vec<LLPoly<R::Elem>> {
    // coefficients of prod (1 + t z)
    let mut e = vec![LLPoly::constant(ring.one())];
    for t in terms {
        e.push(LLPoly::zero());
        for k in (1..e.len()).rev() {
            let shifted = e[k - 1].mul(t);
            e[k] = e[k].add(&shifted);
        }
    }
    e
}

/// The `i`-th power sum of `terms`.
pub fn power_sum<R: Ring>(ring: &R, terms: &[LLPoly<R::Elem>], i: u32) -> LLPoly<R::Elem> {
    terms
        .iter()
        .fold(LLPoly::zero(), |acc, t| acc.add(&t.pow(ring, i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::{Integers, QRat, RationalFunctions};
    use num_bigint::BigInt;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn ll(s: &str) -> LLPoly<BigInt> {
        LLPoly::parse(&Integers, s).unwrap()
    }

    #[test]
    fn degrees_of_monomials() {
        assert_eq!(ll("l1*l2").d1().unwrap(), 2);
        assert_eq!(ll("l1 + l2").d1().unwrap(), 1);
        assert_eq!(ll("l1^-1*l2^-1").d1().unwrap(), -2);
        assert_eq!(ll("l1^3*l2 + l1^3*l2^2").d2().unwrap(), (3, 2));
        assert_eq!(LLPoly::<BigInt>::zero().d2(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn d2_of_distinguished_elements() {
        assert_eq!(bold_x(&Integers, 1).d2().unwrap(), (1, 1));
        assert_eq!(bold_y(&Integers, 1).d2().unwrap(), (2, 1));
    }

    #[test]
    fn term_counts() {
        let x = bold_x(&Integers, 1);
        assert_eq!(x.len(), 7);
        assert!(x.terms().all(|(_, c)| *c == int(1)));
        assert_eq!(bold_x(&Integers, 0), LLPoly::constant(int(7)));
        let y = bold_y(&Integers, 1);
        assert_eq!(y.len(), 13);
        assert_eq!(y.coeff(0, 0), Some(&int(2)));
        assert_eq!(y.terms().filter(|(_, c)| **c == int(1)).count(), 12);
        assert_eq!(bold_y(&Integers, 0), LLPoly::constant(int(14)));
    }

    #[test]
    fn eprime_of_inverse_sum() {
        let p = ll("l1^-1 + l2^-1");
        let e = to_eprime(&Integers, &p).unwrap();
        assert_eq!(e, EPrimePoly::monomial(int(1), 1, -1));
        let e = to_eprime(&Integers, &ll("l1*l2")).unwrap();
        assert_eq!(e, EPrimePoly::monomial(int(1), 0, 1));
    }

    #[test]
    fn eprime_round_trip_of_bold_elements() {
        for i in 0..5 {
            for p in [bold_x(&Integers, i), bold_y(&Integers, i)] {
                let e = to_eprime(&Integers, &p).unwrap();
                assert_eq!(e.expand(&Integers), p);
            }
        }
    }

    #[test]
    fn not_symmetric_is_rejected() {
        assert_eq!(to_eprime(&Integers, &ll("l1^2 + l2")), Err(Error::NotSymmetric));
    }

    #[test]
    fn eprime_basis_is_monic_with_distinct_bidegree() {
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..6u32 {
            for j in -4..4i64 {
                let p = EPrimePoly::monomial(int(1), i, j).expand(&Integers);
                let (top, c) = p.top_term().unwrap();
                assert_eq!(*c, int(1));
                assert_eq!(top, (i as i64 + j, j));
                assert!(seen.insert(top));
            }
        }
    }

    #[test]
    fn phi_matches_term_lists() {
        for i in 0..6u32 {
            assert_eq!(bold_x(&Integers, 1).phi(i as i64), bold_x(&Integers, i));
            assert_eq!(bold_y(&Integers, 1).phi(i as i64), bold_y(&Integers, i));
        }
    }

    #[test]
    fn y_is_e2_minus_x() {
        let e2 = elementary_symmetric(&Integers, &x_summands(&Integers), 2).unwrap();
        assert_eq!(bold_y(&Integers, 1), e2.sub(&bold_x(&Integers, 1)));
    }

    #[test]
    fn elementary_sums_of_x() {
        let terms = x_summands(&Integers);
        assert_eq!(
            elementary_symmetric(&Integers, &terms, 0).unwrap(),
            LLPoly::constant(int(1))
        );
        // oracle: direct product of all seven summands
        let prod = terms
            .iter()
            .fold(LLPoly::constant(int(1)), |acc, t| acc.mul(t));
        assert_eq!(prod, LLPoly::constant(int(1)));
        assert_eq!(elementary_symmetric(&Integers, &terms, 7).unwrap(), prod);
        assert!(matches!(
            elementary_symmetric(&Integers, &terms, 8),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn power_sums_are_bold_elements() {
        for k in 0..8 {
            assert_eq!(power_sum(&Integers, &x_summands(&Integers), k), bold_x(&Integers, k));
            assert_eq!(power_sum(&Integers, &y_summands(&Integers), k), bold_y(&Integers, k));
        }
    }

    #[test]
    fn tilde_collapses_at_q_one() {
        let f = crate::qscalar::CyclotomicField::new(1);
        for i in 0..=5 {
            let bx = bold_x(&f, i);
            assert_eq!(tilde_x(&f, i), bx);
            assert_eq!(tilde_y(&f, i), bold_y(&f, i));
        }
        assert_eq!(tilde_x(&RationalFunctions, 0), LLPoly::constant(QRat::from_int(7)));
    }

    #[test]
    fn tilde_weights_are_twice_the_degree() {
        let f = RationalFunctions;
        for i in 1..4u32 {
            let t = tilde_x(&f, i);
            assert_eq!(t.coeff(i as i64, i as i64), Some(&QRat::q_pow(4 * i as i64)));
            for p in [t, tilde_y(&f, i)] {
                for ((a, b), c) in p.terms().filter(|(k, _)| **k != (0, 0)) {
                    assert_eq!(*c, QRat::q_pow(2 * (a + b)));
                }
            }
        }
    }

    #[test]
    fn d2_is_additive() {
        let a = bold_x(&Integers, 2).add(&ll("3*l1^5*l2^-2"));
        let b = bold_y(&Integers, 3);
        assert_eq!(
            a.mul(&b).d2().unwrap(),
            (a.d2().unwrap().0 + b.d2().unwrap().0, a.d2().unwrap().1 + b.d2().unwrap().1)
        );
    }

    #[test]
    fn text_round_trip() {
        let p = ll("3*l1^2*l2^-1 - l1 + 7 - 2*l2^-4");
        assert_eq!(ll(&p.to_string()), p);
        let f = RationalFunctions;
        let t = tilde_y(&f, 2);
        assert_eq!(LLPoly::parse(&f, &t.to_string()).unwrap(), t);
    }
}
