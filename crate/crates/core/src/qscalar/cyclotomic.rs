use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense;
use super::laurent::LaurentQ;
use crate::error::{Error, ParseError, Result};
use crate::text;

/// The cyclotomic polynomial `Phi_m(t)` as a dense coefficient vector.
pub fn cyclotomic_poly(m: u32) -> Vec<BigInt> {
    assert!(m >= 1, "cyclotomic order must be positive");
    // t^m - 1 divided by Phi_d for every proper divisor d
    let mut p = vec![BigInt::zero(); m as usize + 1];
    p[0] = -BigInt::one();
    p[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            p = dense::exact_div(&p, &cyclotomic_poly(d));
        }
    }
    p
}

/// Euler's totient, i.e. the degree of `Phi_m`.
pub fn euler_phi(m: u32) -> u32 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u32
}

/// An element of `Q(zeta_m)`, stored as a polynomial of degree below
/// `phi(m)` in the primitive root `z`, reduced modulo `Phi_m(z)`.
///
/// Coefficients share one positive denominator `den`, coprime to the
/// content of `num`.
#[derive(Clone)]
pub struct CycScalar {
    m: u32,
    modulus: Arc<Vec<BigInt>>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycScalar {}

impl Hash for CycScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl CycScalar {
    pub(crate) fn from_parts(m: u32, modulus: Arc<Vec<BigInt>>, num: Vec<BigInt>, den: BigInt) -> Self {
        let num = reduce_mod(num, &modulus);
        Self::normalized(m, modulus, num, den)
    }

    fn normalized(m: u32, modulus: Arc<Vec<BigInt>>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        dense::trim(&mut num);
        if num.is_empty() {
            return Self {
                m,
                modulus,
                num,
                den: BigInt::one(),
            };
        }
        let mut g = dense::content(&num).gcd(&den);
        if den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            num = dense::div_scalar(&num, &g);
            den /= &g;
        }
        Self {
            m,
            modulus,
            num,
            den,
        }
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.num[0].is_one() && self.den.is_one()
    }

    /// Coefficient of `z^k` in the reduced residue.
    pub fn coeff(&self, k: usize) -> BigRational {
        let n = self.num.get(k).cloned().unwrap_or_default();
        BigRational::new(n, self.den.clone())
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(
            self.m, rhs.m,
            "arithmetic between different cyclotomic fields"
        );
    }

    fn with(&self, num: Vec<BigInt>, den: BigInt) -> Self {
        Self::normalized(self.m, self.modulus.clone(), num, den)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return self.with(dense::add(&self.num, &rhs.num), self.den.clone());
        }
        let num = dense::add(
            &dense::scale(&self.num, &rhs.den),
            &dense::scale(&rhs.num, &self.den),
        );
        self.with(num, &self.den * &rhs.den)
    }

    pub fn neg(&self) -> Self {
        Self {
            m: self.m,
            modulus: self.modulus.clone(),
            num: dense::neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return self.with(Vec::new(), BigInt::one());
        }
        let prod = reduce_mod(dense::mul(&self.num, &rhs.num), &self.modulus);
        self.with(prod, &self.den * &rhs.den)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // extended Euclid over Q[t] between the residue and Phi_m
        let to_rat = |v: &[BigInt]| -> Vec<BigRational> {
            v.iter().map(|c| BigRational::from_integer(c.clone())).collect()
        };
        let mut r0 = to_rat(&self.modulus);
        let mut r1 = to_rat(&self.num);
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (quot, rem) = rat_divmod(&r0, &r1);
            let next_s = rat_sub(&s0, &rat_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, next_s);
        }
        // r0 is a nonzero constant since Phi_m is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = &r0[0];
        let inv: Vec<BigRational> = s0.iter().map(|x| x / c).collect();
        // s0 is relative to self.num; restore the denominator
        let scale = BigRational::from_integer(self.den.clone());
        let inv: Vec<BigRational> = inv.into_iter().map(|x| x * &scale).collect();
        Ok(self.from_rationals(&inv))
    }

    fn from_rationals(&self, coeffs: &[BigRational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_parts(self.m, self.modulus.clone(), num, den)
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = self.with(vec![BigInt::one()], BigInt::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluates an integer Laurent polynomial at `z`.
    pub(crate) fn eval_laurent(m: u32, modulus: &Arc<Vec<BigInt>>, p: &LaurentQ) -> Self {
        let mut acc = vec![BigInt::zero(); m as usize];
        for (e, c) in p.terms() {
            acc[e.rem_euclid(m as i64) as usize] += c;
        }
        Self::from_parts(m, modulus.clone(), acc, BigInt::one())
    }
}

fn reduce_mod(mut p: Vec<BigInt>, modulus: &[BigInt]) -> Vec<BigInt> {
    dense::trim(&mut p);
    let d = modulus.len() - 1;
    // modulus is monic
    while p.len() > d {
        let top = p.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = p.len() - d;
        for (j, mc) in modulus[..d].iter().enumerate() {
            p[shift + j] -= &top * mc;
        }
    }
    dense::trim(&mut p);
    p
}

fn rat_trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            a.get(i).cloned().unwrap_or_else(BigRational::zero)
                - b.get(i).cloned().unwrap_or_else(BigRational::zero)
        })
        .collect();
    rat_trim(&mut out);
    out
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rat_trim(&mut out);
    out
}

fn rat_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    rat_trim(&mut r);
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r.last().unwrap() / lb;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
        rat_trim(&mut r);
    }
    rat_trim(&mut q);
    (q, r)
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, bool, bool, String)> = (0..self.num.len())
            .rev()
            .filter(|&k| !self.num[k].is_zero())
            .map(|k| {
                let c = self.coeff(k);
                let s = if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                };
                let one = c.is_one();
                let minus_one = (-c).is_one();
                (s, one, minus_one, text::fmt_power("z", k as i64))
            })
            .collect();
        write!(f, "{} mod Phi_{}", text::write_sum(terms), self.m)
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar({self})")
    }
}

/// Parses `<poly in z> mod Phi_m`, returning the order and the rational
/// coefficients by degree (unreduced).
pub(crate) fn parse_cyclotomic(s: &str) -> std::result::Result<(u32, Vec<BigRational>), ParseError> {
    let s = text::strip_outer_parens(s);
    let (poly, modulus) = s
        .rsplit_once("mod")
        .ok_or_else(|| ParseError::new(format!("missing `mod Phi_m` in `{s}`")))?;
    let m: u32 = modulus
        .trim()
        .strip_prefix("Phi_")
        .and_then(|m| m.trim().parse().ok())
        .filter(|&m| m >= 1)
        .ok_or_else(|| ParseError::new(format!("bad modulus `{}`", modulus.trim())))?;
    let mut coeffs: Vec<BigRational> = Vec::new();
    for (neg, term) in text::split_terms(text::strip_outer_parens(poly))? {
        let mut c = BigRational::one();
        let mut deg = 0usize;
        for factor in text::split_factors(&term) {
            if let Some(e) = text::parse_power(&factor, "z") {
                let e = e?;
                if e < 0 {
                    return Err(ParseError::new("negative power of z"));
                }
                deg += e as usize;
            } else {
                let r: BigRational = factor
                    .parse()
                    .map_err(|_| ParseError::new(format!("bad rational `{factor}`")))?;
                c *= r;
            }
        }
        if neg {
            c = -c;
        }
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, BigRational::zero());
        }
        coeffs[deg] += c;
    }
    Ok((m, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), bi(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), bi(&[1, 1]));
        assert_eq!(cyclotomic_poly(4), bi(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(10), bi(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic_poly(16), bi(&[1, 0, 0, 0, 0, 0, 0, 0, 1]));
        for m in 1..40 {
            assert_eq!(cyclotomic_poly(m).len() as u32 - 1, euler_phi(m));
        }
    }

    #[test]
    fn reduction_wraps_powers() {
        // z^5 = -1 in Q(zeta_10)
        let modulus = Arc::new(cyclotomic_poly(10));
        let z5 = CycScalar::eval_laurent(10, &modulus, &LaurentQ::q_pow(5));
        let minus_one = CycScalar::eval_laurent(10, &modulus, &LaurentQ::constant(BigInt::from(-1)));
        assert_eq!(z5, minus_one);
    }
}
