//! Exact linear algebra over a [`Field`]: reduced row echelon form,
//! nullspaces and row-space comparison.

use crate::error::Result;
use crate::qscalar::{Coeff, Field};

/// Rows in reduced row echelon form, built one row at a time.
#[derive(Debug, Clone)]
pub struct Echelon<C> {
    ncols: usize,
    // sorted by pivot column; each row has a 1 at its pivot
    rows: Vec<(usize, Vec<C>)>,
}

impl<C: Coeff> Echelon<C> {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn rows(&self) -> Vec<Vec<C>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    /// Adds a row; returns whether the rank grew.
    ///
    /// # Panics
    /// If the row length differs from `ncols`.
    pub fn insert<F: Field<Elem = C>>(&mut self, field: &F, mut row: Vec<C>) -> Result<bool> {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        for (p, r) in &self.rows {
            if !row[*p].is_zero() {
                let k = row[*p].clone();
                axpy(&mut row, &k, r);
            }
        }
        let Some(pivot) = row.iter().position(|c| !c.is_zero()) else {
            return Ok(false);
        };
        let inv = field.inv(&row[pivot])?;
        for c in row.iter_mut().skip(pivot) {
            *c = c.mul(&inv);
        }
        for (_, r) in self.rows.iter_mut() {
            if !r[pivot].is_zero() {
                let k = r[pivot].clone();
                axpy(r, &k, &row);
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, row));
        Ok(true)
    }

    /// A basis of `{v : row . v = 0 for every row}`, one vector per free column.
    pub fn nullspace<F: Field<Elem = C>>(&self, field: &F) -> Vec<Vec<C>> {
        let pivots = self.pivots();
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![field.zero(); self.ncols];
            v[free] = field.one();
            for (p, r) in &self.rows {
                v[*p] = r[free].neg();
            }
            out.push(v);
        }
        out
    }
}

/// `row -= k * other`.
fn axpy<C: Coeff>(row: &mut [C], k: &C, other: &[C]) {
    for (a, b) in row.iter_mut().zip(other) {
        if !b.is_zero() {
            *a = a.sub(&k.mul(b));
        }
    }
}

/// Reduced row echelon form of the given rows (zero rows dropped).
pub fn rref<F: Field>(field: &F, ncols: usize, rows: &[Vec<F::Elem>]) -> Result<Vec<Vec<F::Elem>>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(field, r.clone())?;
    }
    Ok(e.rows())
}

/// Nullspace basis of the matrix with the given rows.
pub fn nullspace<F: Field>(field: &F, ncols: usize, rows: &[Vec<F::Elem>]) -> Result<Vec<Vec<F::Elem>>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(field, r.clone())?;
    }
    Ok(e.nullspace(field))
}

/// Whether two spanning sets span the same subspace.
pub fn same_span<F: Field>(field: &F, ncols: usize, a: &[Vec<F::Elem>], b: &[Vec<F::Elem>]) -> Result<bool> {
    Ok(rref(field, ncols, a)? == rref(field, ncols, b)?)
}
