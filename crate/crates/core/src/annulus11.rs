//! The commutative algebra `A11` of the twice-marked annulus.
//!
//! Basis: `a^i c^j` (`i` any integer, `j >= 0`) and `f[i,j]` (`i, j >= 0`).
//! Multiplication follows the finite presentation
//!
//! ```text
//! a^±1 f[i,j] = f[i,j]
//! c f[i,j]    = f[i+1,j] - [6]/([2][3]) f[i,j]
//! f[i,j] f[k,l] = f[i+k+2,j+l] - [2]^2 f[i+k,j+l+1] + [8]/[4] f[i+k+1,j+l] - [7] f[i+k,j+l]
//! ```
//!
//! An [`A11Algebra`] fixes the coefficient field and holds the structure
//! constants together with the distinguished elements `x*`, `y*` (placed
//! above the strand), their lower counterparts, and the corrected
//! `y_bar = y^* + f/[2]^2`, `y_under = y_* + f/[2]^2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, ParseError, Result};
use crate::qscalar::{quantum_int, Coeff, Field, LaurentQ, QRat, Ring};
use crate::text;
use crate::weblambda::EPrimePoly;
use crate::xyring::{Algebra, XYPoly};

/// A basis element of `A11`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKey {
    /// `a^i c^j`.
    AC(i64, u32),
    /// `f[i,j]`: `f` with `i` single and `j` double loops inside.
    F(u32, u32),
}

impl BasisKey {
    pub const UNIT: BasisKey = BasisKey::AC(0, 0);
    pub const FF: BasisKey = BasisKey::F(0, 0);
}

impl Ord for BasisKey {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BasisKey::AC(i, j), BasisKey::AC(k, l)) => (j, i).cmp(&(l, k)),
            (BasisKey::F(i, j), BasisKey::F(k, l)) => (i, j).cmp(&(k, l)),
            (BasisKey::AC(..), BasisKey::F(..)) => Ordering::Less,
            (BasisKey::F(..), BasisKey::AC(..)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for BasisKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisKey::AC(0, 0) => f.write_str("1"),
            BasisKey::AC(i, j) => {
                let a = text::fmt_power("a", i);
                let c = text::fmt_power("c", j as i64);
                f.write_str(&text::join_factors([a.as_str(), c.as_str()]))
            }
            BasisKey::F(i, j) => write!(f, "f[{i},{j}]"),
        }
    }
}

/// A finite linear combination of basis elements. Zero coefficients are
/// never stored, so structural equality is equality in `A11`.
#[derive(Clone, PartialEq, Eq)]
pub struct A11Elem<C> {
    terms: BTreeMap<BasisKey, C>,
}

impl<C: Coeff> A11Elem<C> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(key: BasisKey, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(key, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (BasisKey, C)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: BasisKey, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(old) => {
                let sum = old.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
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

    pub fn coeff(&self, key: BasisKey) -> Option<&C> {
        self.terms.get(&key)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &C)> {
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

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (*k, c.mul(s))))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> A11Elem<D> {
        A11Elem::from_terms(self.terms.iter().map(|(k, c)| (*k, f(c))))
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<A11Elem<D>> {
        let mut out = A11Elem::zero();
        for (k, c) in &self.terms {
            out.add_term(*k, f(c)?);
        }
        Ok(out)
    }

    /// Lexicographic maximum of `(j, i)` over the terms `a^i c^j`; `f` terms
    /// are ignored.
    pub fn ac_lead_bidegree(&self) -> Result<(i64, i64)> {
        self.terms
            .keys()
            .filter_map(|k| match *k {
                BasisKey::AC(i, j) => Some((j as i64, i)),
                BasisKey::F(..) => None,
            })
            .max()
            .ok_or(Error::NoACTerm)
    }

    /// Parses the printed form, e.g. `2*a^-1*c^2 - (q + 1)*f[1,0] + 3`.
    pub fn parse<R: Ring<Elem = C>>(ring: &R, s: &str) -> std::result::Result<Self, ParseError> {
        let mut out = Self::zero();
        for (neg, term) in text::split_terms(s)? {
            let mut coef = ring.one();
            let (mut a, mut c) = (0i64, 0i64);
            let mut f: Option<(u32, u32)> = None;
            for factor in text::split_factors(&term) {
                if let Some(e) = text::parse_power(&factor, "a") {
                    a += e?;
                } else if let Some(e) = text::parse_power(&factor, "c") {
                    c += e?;
                } else if let Some(idx) = factor.strip_prefix("f[").and_then(|r| r.strip_suffix(']')) {
                    if f.is_some() {
                        return Err(ParseError::new(format!("two f factors in `{term}`")));
                    }
                    f = Some(parse_f_index(idx)?);
                } else if factor == "f" {
                    if f.is_some() {
                        return Err(ParseError::new(format!("two f factors in `{term}`")));
                    }
                    f = Some((0, 0));
                } else {
                    coef = coef.mul(&ring.parse_elem(&factor)?);
                }
            }
            let key = match f {
                Some((i, j)) => {
                    if c != 0 || a != 0 {
                        return Err(ParseError::new(format!(
                            "`{term}` mixes f with a or c; write it in the basis"
                        )));
                    }
                    BasisKey::F(i, j)
                }
                None => {
                    let c = u32::try_from(c)
                        .map_err(|_| ParseError::new(format!("negative power of c in `{term}`")))?;
                    BasisKey::AC(a, c)
                }
            };
            out.add_term(key, if neg { coef.neg() } else { coef });
        }
        Ok(out)
    }
}

fn parse_f_index(idx: &str) -> std::result::Result<(u32, u32), ParseError> {
    let bad = || ParseError::new(format!("bad f index `[{idx}]`"));
    let (i, j) = idx.split_once(',').ok_or_else(bad)?;
    Ok((
        i.trim().parse().map_err(|_| bad())?,
        j.trim().parse().map_err(|_| bad())?,
    ))
}

impl<C: Coeff> fmt::Display for A11Elem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = text::write_sum(self.terms.iter().map(|(k, c)| {
            let mon = if *k == BasisKey::UNIT {
                String::new()
            } else {
                k.to_string()
            };
            (c.to_string(), c.is_one(), c.is_minus_one(), mon)
        }));
        f.write_str(&s)
    }
}

impl<C: Coeff> fmt::Debug for A11Elem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A11Elem({self})")
    }
}

/// Which pair of elements replaces `(x, y)` in [`A11Algebra::star_sub`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StarMode {
    /// `(x^*, y^*)`.
    Up,
    /// `(x_*, y_*)`.
    Down,
    /// `(x^*, y_bar)`.
    UpBar,
    /// `(x_*, y_under)`.
    DownUnder,
}

fn qr(num: LaurentQ, den: LaurentQ) -> QRat {
    QRat::new(num, den).expect("nonzero denominator")
}

fn qint(k: u32) -> QRat {
    QRat::from_laurent(quantum_int(k))
}

fn ac(i: i64, j: u32) -> BasisKey {
    BasisKey::AC(i, j)
}

/// `x^*` over `Q(q)`.
pub fn x_up_star_generic() -> A11Elem<QRat> {
    let h = qint(2).inv().unwrap();
    let q = |e: i64| QRat::q_pow(e).mul(&h);
    A11Elem::from_terms([
        (ac(1, 0), q(3)),
        (ac(-1, 0), q(-3)),
        (ac(0, 1), q(1)),
        (ac(-1, 1), q(-1)),
    ])
}

/// `y^*` over `Q(q)`.
pub fn y_up_star_generic() -> A11Elem<QRat> {
    let h = qint(2).inv().unwrap();
    let h2 = h.mul(&h);
    let q = |e: i64| QRat::q_pow(e).mul(&h);
    let lq = |s: &str| QRat::from_laurent(LaurentQ::parse(s).unwrap()).mul(&h2);
    A11Elem::from_terms([
        (ac(2, 0), q(3).neg()),
        (ac(-2, 0), q(-3).neg()),
        (ac(1, 1), q(3)),
        (ac(-2, 1), q(-3)),
        (ac(-1, 2), h2.clone()),
        (ac(1, 0), h2.clone()),
        (ac(-1, 0), h2.clone()),
        (ac(0, 1), lq("q^2 - 1")),
        (ac(-1, 1), lq("q^-2 - 1")),
        (BasisKey::UNIT, lq("q^2 + q^-2").neg()),
        (BasisKey::FF, h2.neg()),
    ])
}

/// `1/[2]^2`, the coefficient of the correction term `f`.
fn f_correction() -> QRat {
    qint(2).mul(&qint(2)).inv().unwrap()
}

/// The elements `x^*, y^*, x_*, y_*, y_bar, y_under` over `Q(q)`, in that order.
pub fn star_elements_generic() -> [A11Elem<QRat>; 6] {
    let x_up = x_up_star_generic();
    let y_up = y_up_star_generic();
    let x_down = x_up.map_coeffs(QRat::invert_q);
    let y_down = y_up.map_coeffs(QRat::invert_q);
    let corr = A11Elem::basis(BasisKey::FF, f_correction());
    let y_bar = y_up.add(&corr);
    let y_under = y_down.add(&corr);
    [x_up, y_up, x_down, y_down, y_bar, y_under]
}

/// `A11` over a coefficient field, with its structure constants specialized.
pub struct A11Algebra<F: Field> {
    field: F,
    two_sq: F::Elem,
    eight_over_four: F::Elem,
    seven: F::Elem,
    c_shift: F::Elem,
    stars: [A11Elem<F::Elem>; 6],
    // coefficients of (X - c_shift)^j, so c^j f[i,k] = sum_t coef_t f[i+t,k]
    c_powers: RwLock<Vec<Arc<Vec<F::Elem>>>>,
}

impl<F: Field> fmt::Debug for A11Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A11Algebra({})", self.field.label())
    }
}

fn embed_named<F: Field>(field: &F, value: &QRat, name: &str) -> Result<F::Elem> {
    field.embed(value).map_err(|e| match e {
        Error::DenominatorVanishes { order, .. } => Error::DenominatorVanishes {
            order,
            what: name.to_string(),
        },
        other => other,
    })
}

impl<F: Field> A11Algebra<F> {
    /// Specializes every structure constant, including `[12]^-1`, which the
    /// skein relations behind the presentation require.
    pub fn new(field: F) -> Result<Self> {
        embed_named(&field, &qint(12).inv()?, "1/[12]")?;
        embed_named(&field, &qint(2).inv()?, "1/[2]")?;
        let two_sq = embed_named(&field, &qint(2).mul(&qint(2)), "[2]^2")?;
        let eight_over_four = embed_named(&field, &qr(quantum_int(8), quantum_int(4)), "[8]/[4]")?;
        let seven = embed_named(&field, &qint(7), "[7]")?;
        let c_shift = embed_named(
            &field,
            &qr(quantum_int(6), quantum_int(2).mul(&quantum_int(3))),
            "[6]/([2][3])",
        )?;
        let specialize = |e: &A11Elem<QRat>| e.try_map_coeffs(|c| embed_named(&field, c, "1/[2]"));
        let generic = star_elements_generic();
        let stars = [
            specialize(&generic[0])?,
            specialize(&generic[1])?,
            specialize(&generic[2])?,
            specialize(&generic[3])?,
            specialize(&generic[4])?,
            specialize(&generic[5])?,
        ];
        let one = field.one();
        Ok(Self {
            two_sq,
            eight_over_four,
            seven,
            c_shift,
            stars,
            c_powers: RwLock::new(vec![Arc::new(vec![one])]),
            field,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn unit(&self) -> A11Elem<F::Elem> {
        A11Elem::basis(BasisKey::UNIT, self.field.one())
    }

    pub fn a_pow(&self, i: i64) -> A11Elem<F::Elem> {
        A11Elem::basis(BasisKey::AC(i, 0), self.field.one())
    }

    pub fn c(&self) -> A11Elem<F::Elem> {
        A11Elem::basis(BasisKey::AC(0, 1), self.field.one())
    }

    pub fn f(&self) -> A11Elem<F::Elem> {
        A11Elem::basis(BasisKey::FF, self.field.one())
    }

    pub fn scalar(&self, c: F::Elem) -> A11Elem<F::Elem> {
        A11Elem::basis(BasisKey::UNIT, c)
    }

    pub fn x_up_star(&self) -> &A11Elem<F::Elem> {
        &self.stars[0]
    }

    pub fn y_up_star(&self) -> &A11Elem<F::Elem> {
        &self.stars[1]
    }

    pub fn x_down_star(&self) -> &A11Elem<F::Elem> {
        &self.stars[2]
    }

    pub fn y_down_star(&self) -> &A11Elem<F::Elem> {
        &self.stars[3]
    }

    pub fn y_bar(&self) -> &A11Elem<F::Elem> {
        &self.stars[4]
    }

    pub fn y_under(&self) -> &A11Elem<F::Elem> {
        &self.stars[5]
    }

    /// The pair substituted for `(x, y)` in the given mode.
    pub fn star_pair(&self, mode: StarMode) -> (&A11Elem<F::Elem>, &A11Elem<F::Elem>) {
        match mode {
            StarMode::Up => (self.x_up_star(), self.y_up_star()),
            StarMode::Down => (self.x_down_star(), self.y_down_star()),
            StarMode::UpBar => (self.x_up_star(), self.y_bar()),
            StarMode::DownUnder => (self.x_down_star(), self.y_under()),
        }
    }

    fn c_power(&self, j: u32) -> Arc<Vec<F::Elem>> {
        let j = j as usize;
        if let Some(v) = self.c_powers.read().unwrap().get(j) {
            return v.clone();
        }
        let mut powers = self.c_powers.write().unwrap();
        while powers.len() <= j {
            // one more application of c: f[i,k] -> f[i+1,k] - c_shift f[i,k]
            let prev = powers.last().unwrap();
            let mut next = vec![self.field.zero(); prev.len() + 1];
            for (t, p) in prev.iter().enumerate() {
                next[t + 1] = next[t + 1].add(p);
                next[t] = next[t].sub(&p.mul(&self.c_shift));
            }
            powers.push(Arc::new(next));
        }
        powers[j].clone()
    }

    fn mul_basis(&self, x: BasisKey, y: BasisKey, coef: &F::Elem, out: &mut A11Elem<F::Elem>) {
        use BasisKey::{AC, F as Fk};
        match (x, y) {
            (AC(i, j), AC(k, l)) => out.add_term(AC(i + k, j + l), coef.clone()),
            (AC(_, j), Fk(k, l)) | (Fk(k, l), AC(_, j)) => {
                if j == 0 {
                    out.add_term(Fk(k, l), coef.clone());
                    return;
                }
                for (t, p) in self.c_power(j).iter().enumerate() {
                    out.add_term(Fk(k + t as u32, l), coef.mul(p));
                }
            }
            (Fk(i, j), Fk(k, l)) => {
                let (s, d) = (i + k, j + l);
                out.add_term(Fk(s + 2, d), coef.clone());
                out.add_term(Fk(s, d + 1), coef.mul(&self.two_sq).neg());
                out.add_term(Fk(s + 1, d), coef.mul(&self.eight_over_four));
                out.add_term(Fk(s, d), coef.mul(&self.seven).neg());
            }
        }
    }

    pub fn mul(&self, u: &A11Elem<F::Elem>, v: &A11Elem<F::Elem>) -> A11Elem<F::Elem> {
        let mut out = A11Elem::zero();
        for (x, c) in &u.terms {
            for (y, d) in &v.terms {
                self.mul_basis(*x, *y, &c.mul(d), &mut out);
            }
        }
        out
    }

    pub fn pow(&self, u: &A11Elem<F::Elem>, n: u32) -> A11Elem<F::Elem> {
        let mut acc = self.unit();
        for _ in 0..n {
            acc = self.mul(&acc, u);
        }
        acc
    }

    fn f_map(&self, p: &EPrimePoly<F::Elem>, sign: i64) -> A11Elem<F::Elem> {
        let Some(max_i) = p.terms().map(|((i, _), _)| *i).max() else {
            return A11Elem::zero();
        };
        // (l1 + l2) -> q^±1/[2] (c - a - 1)
        let coef = self.field.q_pow(sign).mul(
            &self
                .field
                .embed(&qint(2).inv().unwrap())
                .expect("[2] is invertible in every supported field"),
        );
        let mut gen = A11Elem::zero();
        gen.add_term(BasisKey::AC(0, 1), coef.clone());
        gen.add_term(BasisKey::AC(1, 0), coef.neg());
        gen.add_term(BasisKey::UNIT, coef.neg());
        let mut powers = vec![self.unit()];
        for _ in 0..max_i {
            powers.push(self.mul(powers.last().unwrap(), &gen));
        }
        // (l1 l2)^j -> q^(±2j) a^j
        let mut out = A11Elem::zero();
        for ((i, j), c) in p.terms() {
            let scale = c.mul(&self.field.q_pow(2 * sign * j));
            for (key, d) in powers[*i as usize].terms() {
                let BasisKey::AC(a, cc) = *key else {
                    unreachable!("the image of E' lies in R[a^±1, c]")
                };
                out.add_term(BasisKey::AC(a + j, cc), d.mul(&scale));
            }
        }
        out
    }

    /// The homomorphism `F^*: E' -> A11` with `l1 l2 -> q^2 a` and
    /// `l1 + l2 -> q/[2] (c - a - 1)`.
    pub fn f_up(&self, p: &EPrimePoly<F::Elem>) -> A11Elem<F::Elem> {
        self.f_map(p, 1)
    }

    /// The homomorphism `F_*` with `l1 l2 -> q^-2 a` and
    /// `l1 + l2 -> q^-1/[2] (c - a - 1)`.
    pub fn f_down(&self, p: &EPrimePoly<F::Elem>) -> A11Elem<F::Elem> {
        self.f_map(p, -1)
    }

    /// `S` evaluated at the mode's pair of elements.
    pub fn star_sub(&self, s: &XYPoly<F::Elem>, mode: StarMode) -> A11Elem<F::Elem> {
        let (x, y) = self.star_pair(mode);
        s.substitute(self, x, y)
    }

    /// `S(x^*, y_bar) - S(x_*, y_under)`, which vanishes iff `S` is transparent.
    pub fn transparency_defect(&self, s: &XYPoly<F::Elem>) -> A11Elem<F::Elem> {
        self.star_sub(s, StarMode::UpBar)
            .sub(&self.star_sub(s, StarMode::DownUnder))
    }

    /// `S(x^*, y^*) - S(x_*, y_*)`, the defining form of the defect.
    pub fn plain_defect(&self, s: &XYPoly<F::Elem>) -> A11Elem<F::Elem> {
        self.star_sub(s, StarMode::Up)
            .sub(&self.star_sub(s, StarMode::Down))
    }
}

impl<F: Field> Algebra for A11Algebra<F> {
    type Coeff = F::Elem;
    type Value = A11Elem<F::Elem>;

    fn zero(&self) -> Self::Value {
        A11Elem::zero()
    }
    fn from_coeff(&self, c: &F::Elem) -> Self::Value {
        self.scalar(c.clone())
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        a.add(b)
    }
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        A11Algebra::mul(self, a, b)
    }
}

/// Images `x^i y^j -> X^i Y^j` of every monomial below a bidegree bound, so
/// that many polynomials can be evaluated as linear combinations.
pub struct MonomialImages<C> {
    images: BTreeMap<(u32, u32), A11Elem<C>>,
}

impl<C: Coeff> MonomialImages<C> {
    /// All `x^i y^j` with `(i + 2j, i + j) <= bound` in lexicographic order.
    pub fn new<F: Field<Elem = C>>(alg: &A11Algebra<F>, mode: StarMode, bound: (u64, u64)) -> Self {
        let (x, y) = alg.star_pair(mode);
        let mut images = BTreeMap::new();
        let mut y_pow = alg.unit();
        for j in 0u32.. {
            if 2 * j as u64 > bound.0 {
                break;
            }
            let mut cur = y_pow.clone();
            for i in 0u32.. {
                if crate::xyring::monomial_bidegree(i, j) > bound {
                    break;
                }
                let next = alg.mul(&cur, x);
                images.insert((i, j), cur);
                cur = next;
            }
            y_pow = alg.mul(&y_pow, y);
        }
        Self { images }
    }

    /// `p(X, Y)`, or `None` if `p` has a monomial outside the precomputed range.
    pub fn eval(&self, p: &XYPoly<C>) -> Option<A11Elem<C>> {
        let mut out = A11Elem::zero();
        for ((i, j), c) in p.terms() {
            let img = self.images.get(&(*i, *j))?;
            for (k, d) in img.terms() {
                out.add_term(*k, d.mul(c));
            }
        }
        Some(out)
    }
}
