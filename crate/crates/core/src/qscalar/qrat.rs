use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dense;
use super::laurent::LaurentQ;
use crate::error::{Error, ParseError, Result};
use crate::text;

/// An element of the rational function field `Q(q)`.
///
/// Canonical form: the denominator is an ordinary polynomial in `q` with a
/// nonzero constant term and positive leading coefficient; numerator and
/// denominator share no polynomial factor and their joint integer content
/// is 1. Structural equality is therefore mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: LaurentQ,
    den: LaurentQ,
}

impl QRat {
    pub fn zero() -> Self {
        Self {
            num: LaurentQ::zero(),
            den: LaurentQ::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentQ::one())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_laurent(LaurentQ::constant(n.into()))
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::from_laurent(LaurentQ::q_pow(exp))
    }

    pub fn from_laurent(num: LaurentQ) -> Self {
        Self {
            num,
            den: LaurentQ::one(),
        }
    }

    /// `num / den`, reduced to canonical form.
    pub fn new(num: LaurentQ, den: LaurentQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn numer(&self) -> &LaurentQ {
        &self.num
    }

    pub fn denom(&self) -> &LaurentQ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Z[q, q^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    fn reduce(num: LaurentQ, den: LaurentQ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // move every power of q into the numerator
        let shift = den.low_exp();
        let num_low = num.low_exp() - shift;
        let mut n = num.dense().to_vec();
        let mut d = den.dense().to_vec();
        if d.len() > 1 {
            let g = dense::gcd_primitive(&n, &d);
            if g.len() > 1 {
                n = dense::exact_div(&n, &g);
                d = dense::exact_div(&d, &g);
            }
        }
        let c = dense::content(&n).gcd(&dense::content(&d));
        let mut c = if d.last().unwrap().is_negative() { -c } else { c };
        if c.is_zero() {
            c = BigInt::one();
        }
        if !c.is_one() {
            n = dense::div_scalar(&n, &c);
            d = dense::div_scalar(&d, &c);
        }
        let num = LaurentQ::from_parts(num_low, n);
        let den = LaurentQ::from_parts(0, d);
        Self { num, den }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_laurent(self.num.add(&rhs.num));
        }
        if self.den == rhs.den {
            return Self::reduce(self.num.add(&rhs.num), self.den.clone());
        }
        Self::reduce(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_laurent(self.num.mul(&rhs.num));
        }
        Self::reduce(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Value at a nonzero rational `q`.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        let den = self.den.eval(q);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(q) / den)
    }

    /// The substitution `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        Self::reduce(self.num.invert_q(), self.den.invert_q())
    }

    pub fn parse(s: &str) -> std::result::Result<Self, ParseError> {
        let mut acc = Self::zero();
        for (neg, term) in text::split_terms(s)? {
            let mut t = Self::one();
            for factor in text::split_factors(&term) {
                t = t.mul(&Self::parse_factor(&factor)?);
            }
            acc = if neg { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }

    fn parse_factor(factor: &str) -> std::result::Result<Self, ParseError> {
        let inner = text::strip_outer_parens(factor);
        if inner.len() != factor.trim().len() {
            return Self::parse(inner);
        }
        if let Some((a, b)) = text::split_top_level(inner, '/') {
            let num = LaurentQ::parse(text::strip_outer_parens(a))?;
            let den = LaurentQ::parse(text::strip_outer_parens(b))?;
            return Self::new(num, den).map_err(|e| ParseError::new(e.to_string()));
        }
        Ok(Self::from_laurent(LaurentQ::parse(inner)?))
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

impl From<LaurentQ> for QRat {
    fn from(l: LaurentQ) -> Self {
        Self::from_laurent(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::quantum_int;

    fn qi(k: u32) -> QRat {
        QRat::from_laurent(quantum_int(k))
    }

    #[test]
    fn inverse_of_quantum_two() {
        let two = qi(2);
        assert!(two.mul(&two.inv().unwrap()).is_one());
    }

    #[test]
    fn eight_over_four() {
        // oracle: [8] = [4](q^4 + q^-4), checked by multiplying back
        let expected = QRat::parse("q^4 + q^-4").unwrap();
        assert_eq!(expected.mul(&qi(4)), qi(8));
        assert_eq!(qi(8).div(&qi(4)).unwrap(), expected);
    }

    #[test]
    fn six_over_two_three() {
        // oracle: (q^2 - 1 + q^-2)[2][3] = [6]
        let expected = QRat::parse("q^2 - 1 + q^-2").unwrap();
        assert_eq!(expected.mul(&qi(2)).mul(&qi(3)), qi(6));
        let got = qi(6).div(&qi(2).mul(&qi(3))).unwrap();
        assert_eq!(got, expected);
        assert!(got.is_laurent());
    }

    #[test]
    fn canonical_form_is_structural() {
        // (q^2 + 1)/(q^3 + q) == 1/q, stored with the q-power in the numerator
        let a = QRat::new(LaurentQ::parse("q^2 + 1").unwrap(), LaurentQ::parse("q^3 + q").unwrap()).unwrap();
        assert_eq!(a, QRat::q_pow(-1));
        let b = QRat::new(LaurentQ::parse("-2").unwrap(), LaurentQ::parse("4*q + 4*q^-1").unwrap()).unwrap();
        assert_eq!(b.to_string(), "(-q)/(2*q^2 + 2)");
        assert_eq!(QRat::parse(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(QRat::zero().inv(), Err(Error::DivisionByZero));
        assert!(QRat::new(LaurentQ::one(), LaurentQ::zero()).is_err());
    }

    #[test]
    fn invert_q_of_fraction() {
        let a = QRat::parse("(q^3)/(q^2 + 2)").unwrap();
        let b = a.invert_q();
        // q^-3 / (q^-2 + 2) = q^-1 / (1 + 2 q^2)
        assert_eq!(b, QRat::parse("(q^-1)/(2*q^2 + 1)").unwrap());
    }
}
