//! Dense univariate polynomials over the integers, indexed by degree.
//!
//! All functions keep vectors trimmed: the last entry is nonzero, and the
//! zero polynomial is the empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn degree(v: &[BigInt]) -> Option<usize> {
    v.len().checked_sub(1)
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[BigInt]) -> Vec<BigInt> {
    a.iter().map(|c| -c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    if k.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * k).collect()
}

/// Nonnegative gcd of all coefficients (zero for the zero polynomial).
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn div_scalar(a: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    a.iter().map(|c| c / k).collect()
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(a: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    if c.is_one() {
        a.to_vec()
    } else {
        div_scalar(a, &c)
    }
}

/// Pseudo-remainder of `a` by nonzero `b`.
pub(crate) fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd (positive leading coefficient) via the primitive remainder
/// sequence. Contents are ignored.
pub(crate) fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return primitive(b);
    }
    if b.is_empty() {
        return primitive(a);
    }
    let (mut p, mut r) = if a.len() >= b.len() {
        (primitive(a), primitive(b))
    } else {
        (primitive(b), primitive(a))
    };
    loop {
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let rem = pseudo_rem(&p, &r);
        if rem.is_empty() {
            return r;
        }
        p = r;
        r = primitive(&rem);
    }
}

/// Exact quotient `a / b`; `b` must divide `a` over the integers.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let (quot, rem) = r.last().unwrap().div_rem(lb);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &quot * bc;
        }
        q[shift] = quot;
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "inexact polynomial division");
    trim(&mut q);
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-2) and (x+1)(3x+5)
        let a = mul(&p(&[1, 1]), &p(&[-2, 1]));
        let b = mul(&p(&[1, 1]), &p(&[5, 3]));
        assert_eq!(gcd_primitive(&a, &b), p(&[1, 1]));
        assert_eq!(gcd_primitive(&p(&[1, 1]), &p(&[1, 0, 1])), p(&[1]));
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = mul(&p(&[2, 0, 3]), &p(&[-1, 4]));
        assert_eq!(exact_div(&a, &p(&[-1, 4])), p(&[2, 0, 3]));
    }

    #[test]
    fn content_and_primitive() {
        assert_eq!(content(&p(&[4, -6, 8])), BigInt::from(2));
        assert_eq!(primitive(&p(&[4, -6, -8])), p(&[-2, 3, 4]));
    }
}
