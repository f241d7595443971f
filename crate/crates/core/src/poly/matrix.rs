use alloc::vec::Vec;

use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::arith::Field;
use crate::{Error, Result};

/// Rectangular matrix of polynomials over one ring, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<K: Field> {
    ring: Ring<K>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<K>>,
}

impl<K: Field> PolyMatrix<K> {
    pub fn from_rows(ring: &Ring<K>, rows: Vec<Vec<Polynomial<K>>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        let entries: Vec<_> = rows.into_iter().flatten().collect();
        if entries.iter().any(|p| !super::polynomial::same_ring(p.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: nrows, cols: ncols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial<K> {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Polynomial<K>] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Polynomial<K>> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    /// The matrix with column `c` removed.
    pub fn delete_column(&self, c: usize) -> Self {
        assert!(c < self.cols);
        let entries = (0..self.rows)
            .flat_map(|r| (0..self.cols).filter(move |&j| j != c).map(move |j| (r, j)))
            .map(|(r, j)| self.get(r, j).clone())
            .collect();
        PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols - 1, entries }
    }

    pub fn replace_column(&self, c: usize, column: &[Polynomial<K>]) -> Self {
        assert_eq!(column.len(), self.rows);
        let mut out = self.clone();
        for (r, p) in column.iter().enumerate() {
            out.entries[r * self.cols + c] = p.clone();
        }
        out
    }

    pub fn swap_rows(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        for c in 0..self.cols {
            out.entries.swap(a * self.cols + c, b * self.cols + c);
        }
        out
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> Result<Polynomial<K>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(self.cofactor_det(&rows, &cols))
    }

    fn cofactor_det(&self, rows: &[usize], cols: &[usize]) -> Polynomial<K> {
        match rows.len() {
            0 => Polynomial::one(&self.ring),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = Polynomial::zero(&self.ring);
                for (k, &c) in cols.iter().enumerate() {
                    let entry = self.get(rows[0], c);
                    if entry.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&j| j != c).collect();
                    let minor = entry * &self.cofactor_det(&rows[1..], &rest);
                    acc = if k % 2 == 0 { &acc + &minor } else { &acc - &minor };
                }
                acc
            }
        }
    }
}

/// Determinant of a square polynomial matrix.
pub fn determinant<K: Field>(m: &PolyMatrix<K>) -> Result<Polynomial<K>> {
    m.determinant()
}
