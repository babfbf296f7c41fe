use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense;
use crate::error::ParseError;
use crate::text;

/// An element of `Z[q, q^-1]`.
///
/// Stored densely as `coeffs[k]` = coefficient of `q^(low + k)`. The first
/// and last stored coefficients are nonzero; zero is the empty vector with
/// `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentQ {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentQ {
    pub fn zero() -> Self {
        Self {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: BigInt, exp: i64) -> Self {
        Self::from_parts(exp, vec![c])
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigInt::one(), exp)
    }

    /// Builds `sum_k coeffs[k] q^(low+k)` and canonicalizes.
    pub fn from_parts(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        dense::trim(&mut coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        Self {
            low: low + lead_zeros as i64,
            coeffs,
        }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_parts(low, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for zero).
    pub fn low_exp(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> Option<i64> {
        dense::degree(&self.coeffs).map(|d| self.low + d as i64)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let k = exp - self.low;
        if k < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub(crate) fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let a = self.shifted_dense(low);
        let b = rhs.shifted_dense(low);
        Self::from_parts(low, dense::add(&a, &b))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            low: self.low,
            coeffs: dense::neg(&self.coeffs),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::from_parts(self.low + rhs.low, dense::mul(&self.coeffs, &rhs.coeffs))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_parts(self.low, dense::scale(&self.coeffs, k))
    }

    /// Multiplies by `q^exp`.
    pub fn shift(&self, exp: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + exp,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The substitution `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        let Some(high) = self.high_exp() else {
            return Self::zero();
        };
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { low: -high, coeffs }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at a nonzero rational `q`.
    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        acc * q.pow(self.low as i32)
    }

    /// Exact quotient, if `rhs` divides `self` in `Z[q, q^-1]`.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let g = dense::gcd_primitive(&self.coeffs, &rhs.coeffs);
        // rhs divides self iff its primitive part divides and its content divides
        let rhs_prim = dense::primitive(&rhs.coeffs);
        if g.len() != rhs_prim.len() {
            return None;
        }
        let quot = dense::exact_div(&self.coeffs, &rhs_prim);
        let rc = dense::content(&rhs.coeffs)
            * if rhs.coeffs.last().unwrap().is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            };
        if quot.iter().any(|c| !(c % &rc).is_zero()) {
            return None;
        }
        Some(Self::from_parts(
            self.low - rhs.low,
            dense::div_scalar(&quot, &rc),
        ))
    }

    fn shifted_dense(&self, low: i64) -> Vec<BigInt> {
        let pad = (self.low - low) as usize;
        let mut v = vec![BigInt::zero(); pad];
        v.extend(self.coeffs.iter().cloned());
        v
    }

    pub fn parse(s: &str) -> Result<Self, ParseError> {
        let mut acc = Self::zero();
        for (neg, term) in text::split_terms(s)? {
            let mut t = Self::one();
            for factor in text::split_factors(&term) {
                let f = text::strip_outer_parens(&factor);
                let value = if f.len() != factor.trim().len() {
                    Self::parse(f)?
                } else if let Some(exp) = text::parse_power(f, "q") {
                    Self::q_pow(exp?)
                } else {
                    let c: BigInt = f
                        .parse()
                        .map_err(|_| ParseError::new(format!("bad integer `{f}`")))?;
                    Self::constant(c)
                };
                t = t.mul(&value);
            }
            acc = if neg { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }
}

/// The quantum integer `[k]`, as the balanced sum `q^(k-1) + q^(k-3) + ... + q^(1-k)`.
pub fn quantum_int(k: u32) -> LaurentQ {
    if k == 0 {
        return LaurentQ::zero();
    }
    // exponents 1-k, 3-k, ..., k-1 in steps of two
    let mut coeffs = vec![BigInt::zero(); 2 * k as usize - 1];
    for c in coeffs.iter_mut().step_by(2) {
        *c = BigInt::one();
    }
    LaurentQ::from_parts(1 - k as i64, coeffs)
}

impl fmt::Display for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms().collect();
        let s = text::write_sum(terms.into_iter().rev().map(|(e, c)| {
            let mon = text::fmt_power("q", e);
            (
                c.to_string(),
                c.is_one(),
                (-c).is_one(),
                mon,
            )
        }));
        f.write_str(&s)
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQ({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lq(s: &str) -> LaurentQ {
        LaurentQ::parse(s).unwrap()
    }

    #[test]
    fn quantum_int_small_values() {
        assert!(quantum_int(0).is_zero());
        assert!(quantum_int(1).is_one());
        assert_eq!(quantum_int(2), lq("q + q^-1"));
        assert_eq!(quantum_int(3), lq("q^2 + 1 + q^-2"));
    }

    #[test]
    fn quantum_int_at_one_is_k() {
        for k in 0..30u32 {
            assert_eq!(quantum_int(k).eval_at_one(), BigInt::from(k));
        }
    }

    #[test]
    fn quantum_int_divisibility() {
        for k in 1..=12u32 {
            for j in 1..=k {
                let big = quantum_int(j * k);
                assert!(
                    big.checked_div(&quantum_int(j)).is_some(),
                    "[{j}] should divide [{}]",
                    j * k
                );
            }
        }
        assert!(quantum_int(12).checked_div(&quantum_int(5)).is_none());
    }

    #[test]
    fn fraction_times_denominator_is_numerator() {
        // [k](q - q^-1) = q^k - q^-k
        for k in 1..10u32 {
            let lhs = quantum_int(k).mul(&lq("q - q^-1"));
            let rhs = LaurentQ::q_pow(k as i64).sub(&LaurentQ::q_pow(-(k as i64)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn prints_and_parses() {
        let p = lq("3*q^2 - q + 5 - 2*q^-3");
        assert_eq!(p.to_string(), "3*q^2 - q + 5 - 2*q^-3");
        assert_eq!(lq(&p.to_string()), p);
        assert_eq!(LaurentQ::zero().to_string(), "0");
        assert_eq!(lq("-q^-1").to_string(), "-q^-1");
    }

    #[test]
    fn invert_q_reverses() {
        assert_eq!(lq("2*q^3 + q^-1").invert_q(), lq("2*q^-3 + q"));
    }
}
