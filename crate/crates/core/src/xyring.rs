//! The polynomial ring `R[x, y]` modelling the annulus skein algebra, where
//! `x` is the single-strand core loop and `y` the double-strand one.
//!
//! Also home to the Newton-identity coefficient tables `e_i`, `f_i`, the
//! power-sum families `P_k`, `Q_k`, the `(i + 2j, i + j)` bidegree, the
//! `P_k Q_l` basis and the embedding `psi: R[x, y] -> E`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, ParseError, Result};
use crate::qscalar::{Coeff, Integers, Ring};
use crate::text;
use crate::weblambda::{bold_x, bold_y, LLPoly};

/// A polynomial in commuting variables `x`, `y`. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct XYPoly<C> {
    terms: BTreeMap<(u32, u32), C>,
}

/// The bidegree `(i + 2j, i + j)` of `x^i y^j`.
pub fn monomial_bidegree(i: u32, j: u32) -> (u64, u64) {
    (i as u64 + 2 * j as u64, i as u64 + j as u64)
}

impl<C: Coeff> XYPoly<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * x^i y^j`.
    pub fn monomial(c: C, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn x<R: Ring<Elem = C>>(ring: &R) -> Self {
        Self::monomial(ring.one(), 1, 0)
    }

    pub fn y<R: Ring<Elem = C>>(ring: &R) -> Self {
        Self::monomial(ring.one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, key: (u32, u32), c: C) {
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

    pub fn coeff(&self, i: u32, j: u32) -> Option<&C> {
        self.terms.get(&(i, j))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &C)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            for ((i, j), d) in &rhs.terms {
                out.add_term((a + i, b + j), c.mul(d));
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

    /// The term of largest bidegree `(i + 2j, i + j)`, compared lexicographically.
    pub fn top_term(&self) -> Option<((u32, u32), &C)> {
        self.terms
            .iter()
            .max_by_key(|((i, j), _)| monomial_bidegree(*i, *j))
            .map(|(k, c)| (*k, c))
    }

    /// The bidegree `D2`: the lexicographic maximum of `(i + 2j, i + j)`.
    pub fn bidegree(&self) -> Result<(u64, u64)> {
        self.top_term()
            .map(|((i, j), _)| monomial_bidegree(i, j))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> XYPoly<D> {
        XYPoly::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    /// Embeds an integer polynomial into `ring`.
    pub fn embed<R: Ring<Elem = C>>(ring: &R, p: &XYPoly<BigInt>) -> Self {
        p.map_coeffs(|c| ring.from_bigint(c))
    }

    /// Evaluates at `(x, y)` in any algebra over the coefficients, by Horner's
    /// rule in `x` inside Horner's rule in `y`.
    pub fn substitute<A: Algebra<Coeff = C>>(&self, alg: &A, x: &A::Value, y: &A::Value) -> A::Value {
        let mut by_y: BTreeMap<u32, BTreeMap<u32, &C>> = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            by_y.entry(*j).or_default().insert(*i, c);
        }
        let Some(&max_j) = by_y.keys().next_back() else {
            return alg.zero();
        };
        let mut acc = alg.zero();
        for j in (0..=max_j).rev() {
            if j != max_j {
                acc = alg.mul(&acc, y);
            }
            if let Some(row) = by_y.get(&j) {
                let max_i = *row.keys().next_back().unwrap();
                let mut inner = alg.zero();
                for i in (0..=max_i).rev() {
                    if i != max_i {
                        inner = alg.mul(&inner, x);
                    }
                    if let Some(c) = row.get(&i) {
                        inner = alg.add(&inner, &alg.from_coeff(c));
                    }
                }
                acc = alg.add(&acc, &inner);
            }
        }
        acc
    }

    pub fn parse<R: Ring<Elem = C>>(ring: &R, s: &str) -> std::result::Result<Self, ParseError> {
        let mut out = Self::zero();
        for (neg, term) in text::split_terms(s)? {
            let mut coef = ring.one();
            let (mut i, mut j) = (0u32, 0u32);
            for factor in text::split_factors(&term) {
                let (slot, e) = if let Some(e) = text::parse_power(&factor, "x") {
                    (&mut i, e?)
                } else if let Some(e) = text::parse_power(&factor, "y") {
                    (&mut j, e?)
                } else {
                    coef = coef.mul(&ring.parse_elem(&factor)?);
                    continue;
                };
                *slot += u32::try_from(e)
                    .map_err(|_| ParseError::new(format!("negative exponent in `{factor}`")))?;
            }
            out.add_term((i, j), if neg { coef.neg() } else { coef });
        }
        Ok(out)
    }
}

impl<C: Coeff> fmt::Display for XYPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // graded, then by the power of x
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|(i, j)| std::cmp::Reverse((i + j, *i)));
        let s = text::write_sum(keys.into_iter().map(|&(i, j)| {
            let c = &self.terms[&(i, j)];
            let x = text::fmt_power("x", i as i64);
            let y = text::fmt_power("y", j as i64);
            (
                c.to_string(),
                c.is_one(),
                c.is_minus_one(),
                text::join_factors([x.as_str(), y.as_str()]),
            )
        }));
        f.write_str(&s)
    }
}

impl<C: Coeff> fmt::Debug for XYPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XYPoly({self})")
    }
}

/// A commutative algebra over some coefficients, as far as polynomial
/// substitution needs.
pub trait Algebra {
    type Coeff: Coeff;
    type Value: Clone;

    fn zero(&self) -> Self::Value;
    /// `c * 1`.
    fn from_coeff(&self, c: &Self::Coeff) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
}

/// `R[x, y]` as an algebra, for composing polynomials.
#[derive(Debug, Clone)]
pub struct PolyAlgebra<R>(pub R);

impl<R: Ring> Algebra for PolyAlgebra<R> {
    type Coeff = R::Elem;
    type Value = XYPoly<R::Elem>;

    fn zero(&self) -> Self::Value {
        XYPoly::zero()
    }
    fn from_coeff(&self, c: &R::Elem) -> Self::Value {
        XYPoly::constant(c.clone())
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a.add(b)
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a.mul(b)
    }
}

/// `E = R[l1^±1, l2^±1]` as an algebra.
#[derive(Debug, Clone)]
pub struct LaurentAlgebra<R>(pub R);

impl<R: Ring> Algebra for LaurentAlgebra<R> {
    type Coeff = R::Elem;
    type Value = LLPoly<R::Elem>;

    fn zero(&self) -> Self::Value {
        LLPoly::zero()
    }
    fn from_coeff(&self, c: &R::Elem) -> Self::Value {
        LLPoly::constant(c.clone())
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a.add(b)
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a.mul(b)
    }
}

const E_TABLE: [&str; 4] = ["1", "x", "x + y", "x^2 - y"];

const F_TABLE: [&str; 8] = [
    "1",
    "y",
    "x^3 - x^2 - 2*x*y - x",
    "x^4 - x^3 - 3*x^2*y - x^2 + 2*y^2 + x + y",
    "x^3*y - x^3 - x^2*y - 2*x*y^2 + x^2 + x*y - y^2 + x + y",
    "x^5 - 2*x^4 - 5*x^3*y + 3*x^2*y + 6*x*y^2 + y^3 + 2*x^2 + 5*x*y + 2*y^2 - x",
    "x^4 - 3*x^3*y + x^2*y^2 - x^2*y + 4*x*y^2 - 2*x^2 + 3*x*y + 2*y^2 + y",
    "-2*x^5 + 4*x^4 + 6*x^3*y + 2*x^2*y^2 + 2*x^3 - 4*x^2*y - 8*x*y^2 - 2*y^3 - 6*x^2 - 6*x*y - 6*y^2 + 2",
];

fn table_entry(table: &[&str], top: usize, i: usize) -> Result<XYPoly<BigInt>> {
    if i > top {
        return Err(Error::IndexOutOfRange {
            index: i as i64,
            max: top as i64,
        });
    }
    // palindromic: entry k equals entry top - k
    let k = if i < table.len() { i } else { top - i };
    Ok(XYPoly::parse(&Integers, table[k]).expect("coefficient tables are well formed"))
}

/// The coefficient `e_i(x, y)`, `0 <= i <= 7`, of the characteristic
/// polynomial of the 7-dimensional representation.
pub fn e_coeff(i: usize) -> Result<XYPoly<BigInt>> {
    table_entry(&E_TABLE, 7, i)
}

/// The coefficient `f_i(x, y)`, `0 <= i <= 14`, for the 14-dimensional representation.
pub fn f_coeff(i: usize) -> Result<XYPoly<BigInt>> {
    table_entry(&F_TABLE, 14, i)
}

/// Newton's identities for a degree-`n` characteristic polynomial with
/// coefficients `coeffs[0..=n]`; `p0 = n`.
fn newton_step(coeffs: &[XYPoly<BigInt>], prev: &[Arc<XYPoly<BigInt>>], k: usize) -> XYPoly<BigInt> {
    let n = coeffs.len() - 1;
    if k == 0 {
        return XYPoly::constant(BigInt::from(n));
    }
    let mut acc = XYPoly::zero();
    for i in 1..=k.min(n) {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        let term = if i == k {
            // only reached for k <= n
            coeffs[k].scale(&BigInt::from(k as i64 * sign))
        } else {
            coeffs[i].mul(&prev[k - i]).scale(&BigInt::from(sign))
        };
        acc = acc.add(&term);
    }
    acc
}

struct PowerSumTable {
    coeffs: Vec<XYPoly<BigInt>>,
    values: RwLock<Vec<Arc<XYPoly<BigInt>>>>,
}

impl PowerSumTable {
    fn new(coeffs: Vec<XYPoly<BigInt>>) -> Self {
        Self {
            coeffs,
            values: RwLock::new(Vec::new()),
        }
    }

    fn get(&self, k: usize) -> Arc<XYPoly<BigInt>> {
        if let Some(v) = self.values.read().unwrap().get(k) {
            return v.clone();
        }
        let mut values = self.values.write().unwrap();
        while values.len() <= k {
            let next = newton_step(&self.coeffs, &values, values.len());
            values.push(Arc::new(next));
        }
        values[k].clone()
    }
}

fn p_table() -> &'static PowerSumTable {
    static TABLE: OnceLock<PowerSumTable> = OnceLock::new();
    TABLE.get_or_init(|| PowerSumTable::new((0..=7).map(|i| e_coeff(i).unwrap()).collect()))
}

fn q_table() -> &'static PowerSumTable {
    static TABLE: OnceLock<PowerSumTable> = OnceLock::new();
    TABLE.get_or_init(|| PowerSumTable::new((0..=14).map(|i| f_coeff(i).unwrap()).collect()))
}

/// `P_k(x, y)` with integer coefficients; `P_0 = 7`.
pub fn p_int(k: usize) -> Arc<XYPoly<BigInt>> {
    p_table().get(k)
}

/// `Q_k(x, y)` with integer coefficients; `Q_0 = 14`.
pub fn q_int(k: usize) -> Arc<XYPoly<BigInt>> {
    q_table().get(k)
}

/// `P_k` over `ring`.
pub fn p_poly<R: Ring>(ring: &R, k: usize) -> XYPoly<R::Elem> {
    XYPoly::embed(ring, &p_int(k))
}

/// `Q_k` over `ring`.
pub fn q_poly<R: Ring>(ring: &R, k: usize) -> XYPoly<R::Elem> {
    XYPoly::embed(ring, &q_int(k))
}

/// Runs Newton's identities against arbitrary coefficient tables; used to
/// confirm that a corrupted table is caught downstream.
pub fn power_sums_from_table(coeffs: &[XYPoly<BigInt>], kmax: usize) -> Vec<XYPoly<BigInt>> {
    let mut values: Vec<Arc<XYPoly<BigInt>>> = Vec::new();
    for k in 0..=kmax {
        let next = newton_step(coeffs, &values, k);
        values.push(Arc::new(next));
    }
    values.into_iter().map(|v| (*v).clone()).collect()
}

/// `P_k Q_l` with the basis convention `P_0 = Q_0 = 1`.
pub fn pq_product(k: usize, l: usize) -> Arc<XYPoly<BigInt>> {
    type Cache = RwLock<HashMap<(usize, usize), Arc<XYPoly<BigInt>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&(k, l)) {
        return v.clone();
    }
    let one = XYPoly::constant(BigInt::from(1));
    let p = if k == 0 { one.clone() } else { (*p_int(k)).clone() };
    let q = if l == 0 { one } else { (*q_int(l)).clone() };
    let value = Arc::new(p.mul(&q));
    cache.write().unwrap().insert((k, l), value.clone());
    value
}

/// Coordinates of `p` in the basis `{P_k Q_l}` (with `P_0 = Q_0 = 1`).
///
/// Peels off the top term `c x^i y^j`, which must be the top term of
/// `c P_i Q_j` since both have bidegree `(i + 2j, i + j)` and are monic.
pub fn to_pq_basis<R: Ring>(ring: &R, p: &XYPoly<R::Elem>) -> BTreeMap<(u32, u32), R::Elem> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some(((i, j), c)) = rest.top_term() {
        let c = c.clone();
        let basis = XYPoly::embed(ring, &pq_product(i as usize, j as usize));
        rest = rest.sub(&basis.scale(&c));
        out.insert((i, j), c);
    }
    out
}

/// Inverse of [`to_pq_basis`].
pub fn from_pq_basis<R: Ring>(ring: &R, coords: &BTreeMap<(u32, u32), R::Elem>) -> XYPoly<R::Elem> {
    coords.iter().fold(XYPoly::zero(), |acc, ((k, l), c)| {
        acc.add(&XYPoly::embed(ring, &pq_product(*k as usize, *l as usize)).scale(c))
    })
}

/// `S(P_i, Q_i)`.
pub fn compose_pq<R: Ring>(ring: &R, s: &XYPoly<R::Elem>, i: usize) -> XYPoly<R::Elem> {
    let alg = PolyAlgebra(ring.clone());
    s.substitute(&alg, &p_poly(ring, i), &q_poly(ring, i))
}

/// The embedding `psi: x -> bold_x(1), y -> bold_y(1)`.
pub fn psi<R: Ring>(ring: &R, p: &XYPoly<R::Elem>) -> LLPoly<R::Elem> {
    psi_at(ring, p, 1)
}

/// `p(bold_x(i), bold_y(i))`.
pub fn psi_at<R: Ring>(ring: &R, p: &XYPoly<R::Elem>, i: u32) -> LLPoly<R::Elem> {
    let alg = LaurentAlgebra(ring.clone());
    p.substitute(&alg, &bold_x(ring, i), &bold_y(ring, i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weblambda::{elementary_symmetric, x_summands, y_summands};

    fn xy(s: &str) -> XYPoly<BigInt> {
        XYPoly::parse(&Integers, s).unwrap()
    }

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn table_values() {
        assert_eq!(e_coeff(0).unwrap(), xy("1"));
        assert_eq!(e_coeff(5).unwrap(), xy("x + y"));
        assert_eq!(
            f_coeff(3).unwrap(),
            xy("x^4 - x^3 - 3*x^2*y - x^2 + 2*y^2 + x + y")
        );
        assert_eq!(f_coeff(11).unwrap(), f_coeff(3).unwrap());
        assert!(matches!(e_coeff(8), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(f_coeff(15), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn small_power_sums() {
        assert_eq!(*p_int(0), xy("7"));
        assert_eq!(*q_int(0), xy("14"));
        assert_eq!(*p_int(1), xy("x"));
        assert_eq!(*q_int(1), xy("y"));
        assert_eq!(*p_int(2), xy("x^2 - 2*x - 2*y"));
        assert_eq!(*q_int(2), xy("y^2 - 2*x^3 + 2*x^2 + 4*x*y + 2*x"));
    }

    #[test]
    fn power_sums_are_monic_with_expected_bidegree() {
        for k in 1..=20u64 {
            let p = p_int(k as usize);
            let q = q_int(k as usize);
            assert_eq!(p.bidegree().unwrap(), (k, k));
            assert_eq!(q.bidegree().unwrap(), (2 * k, k));
            assert_eq!(*p.top_term().unwrap().1, int(1));
            assert_eq!(*q.top_term().unwrap().1, int(1));
        }
    }

    #[test]
    fn bidegree_examples() {
        assert_eq!(xy("x").bidegree().unwrap(), (1, 1));
        assert_eq!(xy("y^3").bidegree().unwrap(), (6, 3));
        assert_eq!(XYPoly::<BigInt>::zero().bidegree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn psi_of_generators_and_products() {
        let r = Integers;
        assert_eq!(psi(&r, &xy("x")), bold_x(&r, 1));
        // oracle: multiply the two 7- and 14-term sums directly
        assert_eq!(psi(&r, &xy("x*y")), bold_x(&r, 1).mul(&bold_y(&r, 1)));
        assert_eq!(psi(&r, &xy("3")), LLPoly::constant(int(3)));
    }

    #[test]
    fn psi_of_power_sums() {
        for k in 1..=10u32 {
            assert_eq!(psi(&Integers, &p_int(k as usize)), bold_x(&Integers, k));
            assert_eq!(psi(&Integers, &q_int(k as usize)), bold_y(&Integers, k));
        }
    }

    #[test]
    fn elementary_sums_match_tables() {
        for i in 0..=7 {
            let lhs = psi(&Integers, &e_coeff(i).unwrap());
            assert_eq!(lhs, elementary_symmetric(&Integers, &x_summands(&Integers), i).unwrap(), "e_{i}");
        }
        for i in 0..=14 {
            let lhs = psi(&Integers, &f_coeff(i).unwrap());
            assert_eq!(lhs, elementary_symmetric(&Integers, &y_summands(&Integers), i).unwrap(), "f_{i}");
        }
    }

    #[test]
    fn pq_basis_examples() {
        let r = Integers;
        let x = to_pq_basis(&r, &xy("x"));
        assert_eq!(x, BTreeMap::from([((1, 0), int(1))]));
        // x^2 = P_2 + 2 P_1 + 2 Q_1
        let x2 = to_pq_basis(&r, &xy("x^2"));
        assert_eq!(
            x2,
            BTreeMap::from([((2, 0), int(1)), ((1, 0), int(2)), ((0, 1), int(2))])
        );
        assert_eq!(from_pq_basis(&r, &x2), xy("x^2"));
        assert_eq!(to_pq_basis(&r, &xy("1")), BTreeMap::from([((0, 0), int(1))]));
    }

    #[test]
    fn compose_examples() {
        let r = Integers;
        assert_eq!(compose_pq(&r, &p_int(2), 3), *p_int(6));
        assert_eq!(compose_pq(&r, &xy("x"), 4), *p_int(4));
        assert_eq!(compose_pq(&r, &q_int(2), 2), *q_int(4));
    }

    #[test]
    fn corrupted_table_breaks_newton() {
        let mut f: Vec<_> = (0..=14).map(|i| f_coeff(i).unwrap()).collect();
        f[3] = f[3].sub(&xy("x"));
        let sums = power_sums_from_table(&f, 3);
        assert_ne!(psi(&Integers, &sums[3]), bold_y(&Integers, 3));
    }

    #[test]
    fn display_matches_grammar() {
        assert_eq!(p_int(2).to_string(), "x^2 - 2*x - 2*y");
        assert_eq!(xy(&q_int(5).to_string()), *q_int(5));
    }
}
