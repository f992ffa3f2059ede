use std::fmt;
use std::sync::Arc;

use crate::ring::{same_ring, Poly, PolyRing};

/// Element of the free module `R^rank`.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeVector {
    ring: Arc<PolyRing>,
    entries: Vec<Poly>,
}

impl FreeVector {
    /// Panics if some entry lives in a different ring.
    pub fn new(ring: &Arc<PolyRing>, entries: Vec<Poly>) -> Self {
        assert!(
            entries.iter().all(|p| same_ring(p.ring(), ring)),
            "vector entries must share the ring"
        );
        FreeVector { ring: ring.clone(), entries }
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        FreeVector { ring: ring.clone(), entries: vec![Poly::zero(ring); rank] }
    }

    /// The standard basis vector `e_index`.
    pub fn basis(ring: &Arc<PolyRing>, rank: usize, index: usize) -> Self {
        let mut v = Self::zero(ring, rank);
        v.entries[index] = Poly::one(ring);
        v
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Poly {
        &self.entries[i]
    }

    pub fn into_entries(self) -> Vec<Poly> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn scale(&self, f: &Poly) -> FreeVector {
        FreeVector { ring: self.ring.clone(), entries: self.entries.iter().map(|e| e * f).collect() }
    }

    pub fn add(&self, other: &FreeVector) -> FreeVector {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        FreeVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &FreeVector) -> FreeVector {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        FreeVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> FreeVector {
        FreeVector { ring: self.ring.clone(), entries: self.entries.iter().map(|e| -e).collect() }
    }

    /// Direct sum `(self, other)` in `R^(a+b)`.
    pub fn concat(&self, other: &FreeVector) -> FreeVector {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        FreeVector { ring: self.ring.clone(), entries }
    }

    /// Entries `range`, as a vector of smaller rank.
    pub fn slice(&self, range: std::ops::Range<usize>) -> FreeVector {
        FreeVector { ring: self.ring.clone(), entries: self.entries[range].to_vec() }
    }

    /// `sum_i coeffs[i] * vectors[i]`, in ambient rank `rank`.
    pub fn combination(ring: &Arc<PolyRing>, rank: usize, coeffs: &[Poly], vectors: &[FreeVector]) -> FreeVector {
        assert_eq!(coeffs.len(), vectors.len());
        let mut acc = FreeVector::zero(ring, rank);
        for (c, v) in coeffs.iter().zip(vectors) {
            if !c.is_zero() {
                acc = acc.add(&v.scale(c));
            }
        }
        acc
    }
}

impl fmt::Display for FreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for FreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeVector{self}")
    }
}
