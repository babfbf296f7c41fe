//! Seeded pseudo-random elements for the sampled checks.

use num_bigint::BigInt;
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::annulus11::{A11Elem, BasisKey};
use crate::qscalar::{quantum_int, Field, LaurentQ, QRat};
use crate::xyring::{monomial_bidegree, XYPoly};

/// A deterministic generator; identical seeds give identical samples.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn small_int(&mut self, bound: i64) -> i64 {
        self.rng.gen_range(-bound..=bound)
    }

    fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let n = self.small_int(bound);
            if n != 0 {
                return n;
            }
        }
    }

    /// A nonzero Laurent polynomial with up to three terms.
    pub fn laurent(&mut self) -> LaurentQ {
        loop {
            let n = self.rng.gen_range(1..=3);
            let p = LaurentQ::from_terms(
                (0..n).map(|_| (self.small_int(3), BigInt::from(self.small_int(4)))),
            );
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// A nonzero rational function, sometimes with a quantum-integer
    /// denominator.
    pub fn qrat(&mut self) -> QRat {
        let num = QRat::from_laurent(self.laurent());
        if self.rng.gen_bool(0.3) {
            let k = self.rng.gen_range(2..=4);
            num.div(&QRat::from_laurent(quantum_int(k)))
                .expect("quantum integers are nonzero")
        } else {
            num
        }
    }

    pub fn basis_key(&mut self, index_bound: u32) -> BasisKey {
        let b = index_bound as i64;
        if self.rng.gen_bool(0.6) {
            BasisKey::AC(self.small_int(b), self.rng.gen_range(0..=index_bound))
        } else {
            BasisKey::F(
                self.rng.gen_range(0..=index_bound),
                self.rng.gen_range(0..=index_bound),
            )
        }
    }

    /// An element of `A11` with one to three terms, indices within
    /// `index_bound`, over `Q(q)`.
    pub fn a11(&mut self, index_bound: u32) -> A11Elem<QRat> {
        let n = self.rng.gen_range(1..=3);
        let mut out = A11Elem::zero();
        for _ in 0..n {
            let key = self.basis_key(index_bound);
            out.add_term(key, self.qrat());
        }
        out
    }

    /// A polynomial in `x, y` with integer coefficients and at most `terms`
    /// monomials, each of bidegree at most `bound`.
    pub fn xy_poly<F: Field>(&mut self, field: &F, bound: (u64, u64), terms: usize) -> XYPoly<F::Elem> {
        let monomials: Vec<(u32, u32)> = (0..=bound.0 as u32)
            .flat_map(|j| (0..=bound.0 as u32).map(move |i| (i, j)))
            .filter(|&(i, j)| monomial_bidegree(i, j) <= bound)
            .collect();
        let mut out = XYPoly::zero();
        for _ in 0..terms {
            let (i, j) = monomials[self.rng.gen_range(0..monomials.len())];
            out.add_term((i, j), field.from_i64(self.nonzero_int(5)));
        }
        out
    }

    pub fn gen_range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::RationalFunctions;

    #[test]
    fn same_seed_same_samples() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..20 {
            assert_eq!(a.a11(4), b.a11(4));
        }
        let mut c = Sampler::new(8);
        let mut d = Sampler::new(7);
        let xs: Vec<_> = (0..5).map(|_| c.a11(4)).collect();
        let ys: Vec<_> = (0..5).map(|_| d.a11(4)).collect();
        assert_ne!(xs, ys);
    }

    #[test]
    fn xy_poly_respects_bound() {
        let mut s = Sampler::new(1);
        for _ in 0..20 {
            let p = s.xy_poly(&RationalFunctions, (8, 8), 5);
            if !p.is_zero() {
                assert!(p.bidegree().unwrap() <= (8, 8));
            }
        }
    }
}
