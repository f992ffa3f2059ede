use std::fmt;
use std::sync::Arc;

use crate::groebner::FreeVector;
use crate::ring::{same_ring, Poly, PolyRing};

/// Matrix over `R` presenting `R^ncols -> R^nrows`; stored by columns.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeMatrix {
    ring: Arc<PolyRing>,
    nrows: usize,
    cols: Vec<FreeVector>,
}

impl FreeMatrix {
    /// Panics when a column has the wrong rank or ring.
    pub fn from_columns(ring: &Arc<PolyRing>, nrows: usize, cols: Vec<FreeVector>) -> Self {
        for c in &cols {
            assert_eq!(c.rank(), nrows, "column rank must equal the row count");
            assert!(same_ring(c.ring(), ring), "columns must share the ring");
        }
        FreeMatrix { ring: ring.clone(), nrows, cols }
    }

    /// Row-major construction.
    pub fn from_rows(ring: &Arc<PolyRing>, ncols: usize, rows: Vec<Vec<Poly>>) -> Self {
        let nrows = rows.len();
        let cols = (0..ncols)
            .map(|j| FreeVector::new(ring, rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        FreeMatrix { ring: ring.clone(), nrows, cols }
    }

    pub fn zero(ring: &Arc<PolyRing>, nrows: usize, ncols: usize) -> Self {
        FreeMatrix { ring: ring.clone(), nrows, cols: vec![FreeVector::zero(ring, nrows); ncols] }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        FreeMatrix { ring: ring.clone(), nrows: n, cols: (0..n).map(|i| FreeVector::basis(ring, n, i)).collect() }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[FreeVector] {
        &self.cols
    }

    pub fn column(&self, j: usize) -> &FreeVector {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        self.cols[j].entry(i)
    }

    pub fn rows(&self) -> Vec<Vec<Poly>> {
        (0..self.nrows).map(|i| self.cols.iter().map(|c| c.entry(i).clone()).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(FreeVector::is_zero)
    }

    /// `self * v`.
    pub fn apply(&self, v: &FreeVector) -> FreeVector {
        assert_eq!(v.rank(), self.ncols(), "vector rank must equal the column count");
        FreeVector::combination(&self.ring, self.nrows, v.entries(), &self.cols)
    }

    /// `self * rhs`.
    pub fn compose(&self, rhs: &FreeMatrix) -> FreeMatrix {
        assert_eq!(rhs.nrows, self.ncols(), "inner dimensions must agree");
        FreeMatrix { ring: self.ring.clone(), nrows: self.nrows, cols: rhs.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn scale(&self, f: &Poly) -> FreeMatrix {
        FreeMatrix { ring: self.ring.clone(), nrows: self.nrows, cols: self.cols.iter().map(|c| c.scale(f)).collect() }
    }

    /// Columns of `self` followed by the columns of `other`.
    pub fn hconcat(&self, other: &FreeMatrix) -> FreeMatrix {
        assert_eq!(self.nrows, other.nrows);
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        FreeMatrix { ring: self.ring.clone(), nrows: self.nrows, cols }
    }

    /// Block-diagonal sum, `self` first.
    pub fn direct_sum(&self, other: &FreeMatrix) -> FreeMatrix {
        let mut cols: Vec<FreeVector> = self
            .cols
            .iter()
            .map(|c| c.concat(&FreeVector::zero(&self.ring, other.nrows)))
            .collect();
        cols.extend(other.cols.iter().map(|c| FreeVector::zero(&self.ring, self.nrows).concat(c)));
        FreeMatrix { ring: self.ring.clone(), nrows: self.nrows + other.nrows, cols }
    }

    pub fn remove_column(&mut self, j: usize) -> FreeVector {
        self.cols.remove(j)
    }

    pub fn remove_row(&mut self, i: usize) {
        self.nrows -= 1;
        for c in &mut self.cols {
            let mut entries = c.clone().into_entries();
            entries.remove(i);
            *c = FreeVector::new(&self.ring, entries);
        }
    }

    pub fn set_column(&mut self, j: usize, v: FreeVector) {
        assert_eq!(v.rank(), self.nrows);
        self.cols[j] = v;
    }
}

impl fmt::Display for FreeMatrix {
    /// One bracketed row per line, entries in the polynomial grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeMatrix {}x{}\n{self}", self.nrows, self.ncols())
    }
}
