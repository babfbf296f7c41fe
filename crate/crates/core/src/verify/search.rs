//! Brute-force search for transparent polynomials below a bidegree bound.

use std::collections::BTreeMap;

use rayon::prelude::*;

use num_rational::BigRational;

use crate::annulus11::{A11Algebra, A11Elem, BasisKey, MonomialImages, StarMode};
use crate::error::Result;
use crate::linalg::{self, Echelon};
use crate::qscalar::{Coeff, Field, QRat, RationalFunctions, RationalPoint, Ring};
use crate::xyring::{from_pq_basis, monomial_bidegree, p_poly, pq_product, q_poly, to_pq_basis, XYPoly};

/// The transparent polynomials of bidegree at most `bound`, as a nullspace
/// basis in coordinates over `labels` (the basis `P_k Q_l`, `P_0 = Q_0 = 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransparentSubspace<C> {
    /// Cyclotomic order of `q`, `None` for generic `q`.
    pub m: Option<u32>,
    pub bound: (u64, u64),
    pub labels: Vec<(u32, u32)>,
    pub basis: Vec<Vec<C>>,
}

impl<C: Coeff> TransparentSubspace<C> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The basis vectors as polynomials in `x, y`.
    pub fn polys<F: Field<Elem = C>>(&self, field: &F) -> Vec<XYPoly<C>> {
        self.basis
            .iter()
            .map(|v| {
                let coords: BTreeMap<(u32, u32), C> = self
                    .labels
                    .iter()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(l, c)| (*l, c.clone()))
                    .collect();
                from_pq_basis(field, &coords)
            })
            .collect()
    }

    /// Whether this subspace equals the span of `vectors` (same coordinates).
    pub fn equals_span<F: Field<Elem = C>>(&self, field: &F, vectors: &[Vec<C>]) -> Result<bool> {
        linalg::same_span(field, self.labels.len(), &self.basis, vectors)
    }
}

/// All `(k, l)` with `D2(P_k Q_l) = (k + 2l, k + l) <= bound`, in increasing bidegree.
pub fn pq_labels(bound: (u64, u64)) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = (0..=bound.0 as u32)
        .flat_map(|l| (0..=bound.0 as u32).map(move |k| (k, l)))
        .filter(|&(k, l)| monomial_bidegree(k, l) <= bound)
        .collect();
    out.sort_by_key(|&(k, l)| monomial_bidegree(k, l));
    out
}

/// The order `n` of `q^2` when `q` is a primitive `m`-th root of unity.
pub fn order_of_q_squared(m: u32) -> u32 {
    if m.is_multiple_of(2) {
        m / 2
    } else {
        m
    }
}

/// Coordinates of `p` over `labels`, or `None` if `p` leaves their span.
pub fn coordinates<F: Field>(field: &F, labels: &[(u32, u32)], p: &XYPoly<F::Elem>) -> Option<Vec<F::Elem>> {
    let coords = to_pq_basis(field, p);
    let mut v = vec![field.zero(); labels.len()];
    for (key, c) in coords {
        let idx = labels.iter().position(|l| *l == key)?;
        v[idx] = c;
    }
    Some(v)
}

/// Spanning set of the truncation of `R[P_n, Q_n]` below `bound`: every
/// `P_n^a Q_n^b` with `(a n + 2 b n, a n + b n) <= bound`. With `n = None`
/// (generic `q`) this is just the constants.
pub fn expected_truncation<F: Field>(field: &F, n: Option<u32>, bound: (u64, u64)) -> Vec<XYPoly<F::Elem>> {
    let one = XYPoly::constant(field.one());
    let Some(n) = n else {
        return vec![one];
    };
    let (p, q) = (p_poly(field, n as usize), q_poly(field, n as usize));
    let mut out = Vec::new();
    let mut q_pow = one;
    for b in 0u32.. {
        if monomial_bidegree(0, b * n) > bound {
            break;
        }
        let mut cur = q_pow.clone();
        for a in 0u32.. {
            if monomial_bidegree(a * n, b * n) > bound {
                break;
            }
            let next = cur.mul(&p);
            out.push(cur);
            cur = next;
        }
        q_pow = q_pow.mul(&q);
    }
    out
}

type Columns<C> = (Vec<(u32, u32)>, Vec<A11Elem<C>>);

/// Transparency defects of the basis elements `P_k Q_l` below `bound`.
fn defect_columns<F: Field>(field: &F, bound: (u64, u64)) -> Result<Columns<F::Elem>> {
    let alg = A11Algebra::new(field.clone())?;
    let (up, down) = rayon::join(
        || MonomialImages::new(&alg, StarMode::UpBar, bound),
        || MonomialImages::new(&alg, StarMode::DownUnder, bound),
    );
    let labels = pq_labels(bound);
    let columns = labels
        .par_iter()
        .map(|&(k, l)| {
            let s = XYPoly::embed(field, &pq_product(k as usize, l as usize));
            let hi = up.eval(&s).expect("basis element within bound");
            let lo = down.eval(&s).expect("basis element within bound");
            hi.sub(&lo)
        })
        .collect();
    Ok((labels, columns))
}

/// One equation per basis element of `A11` occurring in some defect.
fn equations<F: Field>(field: &F, ncols: usize, columns: &[A11Elem<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let mut rows: BTreeMap<BasisKey, Vec<F::Elem>> = BTreeMap::new();
    for (col, defect) in columns.iter().enumerate() {
        for (key, c) in defect.terms() {
            rows.entry(*key).or_insert_with(|| vec![field.zero(); ncols])[col] = c.clone();
        }
    }
    rows.into_values().collect()
}

/// Row-reduces until the rank reaches `max_rank`.
fn echelon<F: Field>(field: &F, ncols: usize, rows: Vec<Vec<F::Elem>>, max_rank: usize) -> Result<Echelon<F::Elem>> {
    let mut ech = Echelon::new(ncols);
    for row in rows {
        if ech.rank() >= max_rank {
            break;
        }
        ech.insert(field, row)?;
    }
    Ok(ech)
}

/// Solves for all `S = sum a_kl P_k Q_l` below `bound` with zero
/// transparency defect, by exact elimination over `field`.
pub fn search_transparent<F: Field>(field: &F, bound: (u64, u64)) -> Result<TransparentSubspace<F::Elem>> {
    let (labels, columns) = defect_columns(field, bound)?;
    let n = labels.len();
    let ech = echelon(field, n, equations(field, n, &columns), n)?;
    Ok(TransparentSubspace {
        m: field.order(),
        bound,
        basis: ech.nullspace(field),
        labels,
    })
}

/// [`search_transparent`] over `Q(q)`, with a cheaper exact argument tried
/// first.
///
/// Basis elements whose defect vanishes identically span part of the
/// answer. Specializing `q` to a rational point can only lower the rank, so
/// if the rank there already leaves room for nothing else, those basis
/// elements span the whole nullspace over `Q(q)`. Otherwise the system is
/// solved over `Q(q)` directly.
pub fn search_transparent_generic(bound: (u64, u64)) -> Result<TransparentSubspace<QRat>> {
    let field = RationalFunctions;
    let (labels, columns) = defect_columns(&field, bound)?;
    let n = labels.len();
    let zero_cols: Vec<usize> = (0..n).filter(|&i| columns[i].is_zero()).collect();
    let rows = equations(&field, n, &columns);
    let target = n - zero_cols.len();
    for q0 in [2i64, 3, 5, 7] {
        let point = RationalPoint::new(BigRational::from_integer(q0.into()));
        let Ok(special) = rows
            .iter()
            .map(|r| r.iter().map(|c| point.embed(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
        else {
            continue;
        };
        if echelon(&point, n, special, target)?.rank() == target {
            let basis = zero_cols
                .iter()
                .map(|&i| {
                    let mut v = vec![field.zero(); n];
                    v[i] = field.one();
                    v
                })
                .collect();
            return Ok(TransparentSubspace {
                m: None,
                bound,
                labels,
                basis,
            });
        }
    }
    let ech = echelon(&field, n, rows, target)?;
    Ok(TransparentSubspace {
        m: None,
        bound,
        basis: ech.nullspace(&field),
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qscalar::CyclotomicField;

    #[test]
    fn labels_under_bound() {
        let labels = pq_labels((10, 10));
        assert_eq!(labels.len(), 36);
        assert_eq!(labels[0], (0, 0));
        assert!(labels.contains(&(0, 5)));
        assert!(!labels.contains(&(1, 5)));
        assert_eq!(pq_labels((2, 1)), vec![(0, 0), (1, 0), (0, 1)]);
    }

    #[test]
    fn q_squared_orders() {
        assert_eq!(order_of_q_squared(10), 5);
        assert_eq!(order_of_q_squared(7), 7);
        assert_eq!(order_of_q_squared(1), 1);
        assert_eq!(order_of_q_squared(2), 1);
    }

    #[test]
    fn truncation_for_n5() {
        let f = CyclotomicField::new(10);
        let t = expected_truncation(&f, Some(5), (10, 10));
        // 1, P5, P5^2, Q5
        assert_eq!(t.len(), 4);
        let t = expected_truncation(&f, Some(5), (10, 5));
        assert_eq!(t.len(), 3);
    }

    #[test]
    fn small_search_at_m10() {
        let f = CyclotomicField::new(10);
        let sub = search_transparent(&f, (5, 5)).unwrap();
        let expected: Vec<_> = expected_truncation(&f, Some(5), (5, 5))
            .iter()
            .map(|p| coordinates(&f, &sub.labels, p).unwrap())
            .collect();
        assert!(sub.equals_span(&f, &expected).unwrap());
        assert_eq!(sub.dim(), 2);
    }

    #[test]
    fn generic_shortcut_agrees_with_full_elimination() {
        let fast = search_transparent_generic((4, 4)).unwrap();
        let slow = search_transparent(&RationalFunctions, (4, 4)).unwrap();
        assert!(fast.equals_span(&RationalFunctions, &slow.basis).unwrap());
        assert_eq!(fast.dim(), 1);
        assert_eq!(fast.basis[0][0], QRat::one());
    }
}
