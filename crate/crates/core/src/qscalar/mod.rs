//! Exact coefficient arithmetic.
//!
//! Three coefficient domains are provided, each with a context value that
//! knows how to build constants:
//!
//! * [`Integers`]: plain `BigInt`, used for the integral tables and the
//!   power-sum recursions.
//! * [`RationalFunctions`]: the field `Q(q)` of [`QRat`] values.
//! * [`CyclotomicField`]: `Q(zeta_m)`, the image of `Q(q)` under `q -> zeta_m`.
//!
//! Polynomial types elsewhere in the crate are generic over [`Ring`] and
//! [`Field`] so the same code runs over any of them.

mod cyclotomic;
mod dense;
mod laurent;
mod qrat;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use cyclotomic::{cyclotomic_poly, euler_phi, CycScalar};
pub use laurent::{quantum_int, LaurentQ};
pub use qrat::QRat;

use crate::error::{Error, ParseError, Result};

/// Arithmetic on coefficient values. Constants come from a [`Ring`] context.
pub trait Coeff: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_minus_one(&self) -> bool {
        self.neg().is_one()
    }
}

/// A coefficient domain: supplies constants and parses values.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Coeff;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn parse_elem(&self, s: &str) -> std::result::Result<Self::Elem, ParseError>;

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_bigint(&BigInt::from(n))
    }
}

/// A coefficient field receiving `Q(q)`: either `Q(q)` itself or a
/// specialization of it.
pub trait Field: Ring {
    /// Image of a rational function; fails if its denominator vanishes.
    fn embed(&self, s: &QRat) -> Result<Self::Elem>;
    fn inv(&self, x: &Self::Elem) -> Result<Self::Elem>;
    /// Human-readable name, e.g. `Q(q)` or `Q(zeta_10)`.
    fn label(&self) -> String;
    /// Cyclotomic order of `q`, or `None` for generic `q`.
    fn order(&self) -> Option<u32>;

    fn q_pow(&self, exp: i64) -> Self::Elem {
        self.embed(&QRat::q_pow(exp))
            .expect("powers of q never have vanishing denominators")
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(a.mul(&self.inv(b)?))
    }
}

impl Coeff for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for QRat {
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
    fn is_one(&self) -> bool {
        QRat::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        QRat::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        QRat::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        QRat::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        QRat::neg(self)
    }
}

impl Coeff for CycScalar {
    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }
    fn is_one(&self) -> bool {
        CycScalar::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        CycScalar::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        CycScalar::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        CycScalar::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        CycScalar::neg(self)
    }
}

impl Coeff for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// The integers, for integral tables and recursions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_bigint(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn parse_elem(&self, s: &str) -> std::result::Result<BigInt, ParseError> {
        let t = crate::text::strip_outer_parens(s);
        t.replace(' ', "")
            .parse()
            .map_err(|_| ParseError::new(format!("bad integer `{t}`")))
    }
}

/// The field `Q(q)` with generic `q`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RationalFunctions;

impl Ring for RationalFunctions {
    type Elem = QRat;

    fn zero(&self) -> QRat {
        QRat::zero()
    }
    fn one(&self) -> QRat {
        QRat::one()
    }
    fn from_bigint(&self, n: &BigInt) -> QRat {
        QRat::from_int(n.clone())
    }
    fn parse_elem(&self, s: &str) -> std::result::Result<QRat, ParseError> {
        QRat::parse(s)
    }
}

impl Field for RationalFunctions {
    fn embed(&self, s: &QRat) -> Result<QRat> {
        Ok(s.clone())
    }
    fn inv(&self, x: &QRat) -> Result<QRat> {
        x.inv()
    }
    fn label(&self) -> String {
        "Q(q)".to_string()
    }
    fn order(&self) -> Option<u32> {
        None
    }
}

/// The field `Q(zeta_m)`, with `q` sent to the primitive root `zeta_m`.
#[derive(Clone)]
pub struct CyclotomicField {
    m: u32,
    modulus: Arc<Vec<BigInt>>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicField({})", self.m)
    }
}

impl CyclotomicField {
    /// # Panics
    /// If `m == 0`.
    pub fn new(m: u32) -> Self {
        Self {
            m,
            modulus: Arc::new(cyclotomic_poly(m)),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Degree of the field over `Q`.
    pub fn degree(&self) -> u32 {
        (self.modulus.len() - 1) as u32
    }

    /// The generator `zeta_m`.
    pub fn zeta(&self) -> CycScalar {
        self.q_pow(1)
    }

    pub fn from_rational(&self, r: &BigRational) -> CycScalar {
        CycScalar::from_parts(
            self.m,
            self.modulus.clone(),
            vec![r.numer().clone()],
            r.denom().clone(),
        )
    }

    fn eval(&self, p: &LaurentQ) -> CycScalar {
        CycScalar::eval_laurent(self.m, &self.modulus, p)
    }
}

impl Ring for CyclotomicField {
    type Elem = CycScalar;

    fn zero(&self) -> CycScalar {
        self.from_bigint(&BigInt::zero())
    }
    fn one(&self) -> CycScalar {
        self.from_bigint(&BigInt::one())
    }
    fn from_bigint(&self, n: &BigInt) -> CycScalar {
        CycScalar::from_parts(self.m, self.modulus.clone(), vec![n.clone()], BigInt::one())
    }
    fn parse_elem(&self, s: &str) -> std::result::Result<CycScalar, ParseError> {
        // a bare polynomial in z is read modulo this field's Phi_m
        let (m, coeffs) = if s.contains("mod") {
            cyclotomic::parse_cyclotomic(s)?
        } else {
            cyclotomic::parse_cyclotomic(&format!("({}) mod Phi_{}", s.trim(), self.m))?
        };
        if m != self.m {
            return Err(ParseError::new(format!(
                "expected an element of Q(zeta_{}), found Phi_{m}",
                self.m
            )));
        }
        let mut acc = self.zero();
        let z = self.zeta();
        let mut zk = self.one();
        for c in &coeffs {
            acc = acc.add(&zk.mul(&self.from_rational(c)));
            zk = zk.mul(&z);
        }
        Ok(acc)
    }
}

impl Field for CyclotomicField {
    fn embed(&self, s: &QRat) -> Result<CycScalar> {
        let den = self.eval(s.denom());
        if den.is_zero() {
            return Err(Error::DenominatorVanishes {
                order: self.m,
                what: s.denom().to_string(),
            });
        }
        self.eval(s.numer()).div(&den)
    }
    fn inv(&self, x: &CycScalar) -> Result<CycScalar> {
        x.inv()
    }
    fn label(&self) -> String {
        format!("Q(zeta_{})", self.m)
    }
    fn order(&self) -> Option<u32> {
        Some(self.m)
    }
}

/// `Q` with `q` sent to a nonzero rational number.
///
/// Ranks can only drop under specialization, so a rank computed here is a
/// lower bound for the rank over `Q(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    q: BigRational,
}

impl RationalPoint {
    /// # Panics
    /// If `q` is zero.
    pub fn new(q: BigRational) -> Self {
        assert!(!Zero::is_zero(&q), "q must be nonzero");
        Self { q }
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }
}

impl Ring for RationalPoint {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn parse_elem(&self, s: &str) -> std::result::Result<BigRational, ParseError> {
        let t = crate::text::strip_outer_parens(s).replace(' ', "");
        t.parse()
            .map_err(|_| ParseError::new(format!("bad rational `{t}`")))
    }
}

impl Field for RationalPoint {
    fn embed(&self, s: &QRat) -> Result<BigRational> {
        s.eval(&self.q)
    }
    fn inv(&self, x: &BigRational) -> Result<BigRational> {
        if Zero::is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        Ok(x.recip())
    }
    fn label(&self) -> String {
        format!("Q at q = {}", self.q)
    }
    fn order(&self) -> Option<u32> {
        None
    }
}

/// Evaluates `s` at a fixed primitive `m`-th root of unity.
pub fn specialize(s: &QRat, m: u32) -> Result<CycScalar> {
    CyclotomicField::new(m).embed(s)
}
