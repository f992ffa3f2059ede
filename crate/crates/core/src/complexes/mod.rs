//! Bounded complexes of free modules in degrees `[-N, 0]`, Koszul
//! complexes, tensor products, mapping cones, homology and free
//! resolutions.
//!
//! Index conventions: `ranks[q]` is the rank in degree `-q`, and
//! `differential(q)` is `∂^{-q}`, a `ranks[q-1] x ranks[q]` matrix.

mod resolution;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use thiserror::Error;

pub use resolution::free_resolution;

use crate::groebner::FreeVector;
use crate::modmath::{image_module, kernel_module, FreeMatrix, ModuleError, SubquotientModule};
use crate::ring::{same_ring, Poly, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("differential in degree -{degree} has the wrong shape")]
    ShapeMismatch { degree: usize },
    #[error("composite of the differentials out of degree -{degree} is not zero")]
    NotAComplex { degree: usize },
    #[error("complexes live over different rings")]
    RingMismatch,
    #[error("degree {degree} is outside [-{length}, 0]")]
    DegreeOutOfRange { degree: i64, length: usize },
    #[error("resolution not exact after {max_len} steps")]
    ResolutionTruncated { max_len: usize },
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct FreeComplex {
    ring: Arc<PolyRing>,
    ranks: Vec<usize>,
    differentials: Vec<FreeMatrix>,
}

impl FreeComplex {
    /// Validates shapes and `∂ ∘ ∂ = 0`.
    pub fn new(ring: &Arc<PolyRing>, ranks: Vec<usize>, differentials: Vec<FreeMatrix>) -> Result<Self, ComplexError> {
        assert!(!ranks.is_empty(), "a complex has at least degree 0");
        if differentials.len() + 1 != ranks.len() {
            return Err(ComplexError::ShapeMismatch { degree: ranks.len().min(differentials.len() + 1) });
        }
        for (i, d) in differentials.iter().enumerate() {
            if !same_ring(d.ring(), ring) {
                return Err(ComplexError::RingMismatch);
            }
            if d.nrows() != ranks[i] || d.ncols() != ranks[i + 1] {
                return Err(ComplexError::ShapeMismatch { degree: i + 1 });
            }
        }
        for (i, pair) in differentials.windows(2).enumerate() {
            if !pair[0].compose(&pair[1]).is_zero() {
                return Err(ComplexError::NotAComplex { degree: i + 2 });
            }
        }
        Ok(FreeComplex { ring: ring.clone(), ranks, differentials })
    }

    /// `R^rank` in degree 0 and nothing else.
    pub fn concentrated(ring: &Arc<PolyRing>, rank: usize) -> Self {
        FreeComplex { ring: ring.clone(), ranks: vec![rank], differentials: Vec::new() }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// `N`, so the complex lives in `[-N, 0]`.
    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, q: usize) -> usize {
        self.ranks.get(q).copied().unwrap_or(0)
    }

    /// `∂^{-q}` for `1 <= q <= N`.
    pub fn differential(&self, q: usize) -> &FreeMatrix {
        assert!((1..=self.length()).contains(&q), "no differential out of degree -{q}");
        &self.differentials[q - 1]
    }

    pub fn differentials(&self) -> &[FreeMatrix] {
        &self.differentials
    }

    /// Every matrix multiplied by `x`.
    pub fn scale(&self, x: &Poly) -> FreeComplex {
        let differentials = self.differentials.iter().map(|d| d.scale(x)).collect();
        FreeComplex::new(&self.ring, self.ranks.clone(), differentials).expect("scaling preserves a complex")
    }

    /// Structured text: rank per degree, then each differential.
    pub fn report(&self) -> String {
        let mut out = format!("complex over {}\n", self.ring);
        for q in 0..=self.length() {
            let degree = if q == 0 { "0".to_string() } else { format!("-{q}") };
            out.push_str(&format!("degree {degree}: rank {}\n", self.ranks[q]));
        }
        for q in 1..=self.length() {
            out.push_str(&format!("d^-{q}:\n"));
            let d = self.differential(q);
            if d.nrows() == 0 || d.ncols() == 0 {
                out.push_str(&format!("  ({}x{} zero)\n", d.nrows(), d.ncols()));
                continue;
            }
            for row in d.to_string().lines() {
                out.push_str(&format!("  {row}\n"));
            }
        }
        out
    }
}

impl fmt::Debug for FreeComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.report())
    }
}

/// Increasing `q`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, q: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(q).collect()
}

/// Koszul complex with `∧^q R^n` in degree `-q`. The entry in row
/// `S - {i_j}`, column `S` is `(-1)^j f_{i_j}`, with `j` counted from 1.
pub fn koszul_complex(ring: &Arc<PolyRing>, f: &[Poly]) -> FreeComplex {
    let n = f.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|q| subsets(n, q)).collect();
    let mut differentials = Vec::with_capacity(n);
    for q in 1..=n {
        let index: HashMap<&[usize], usize> = bases[q - 1].iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let cols = bases[q]
            .iter()
            .map(|s| {
                let mut entries = vec![Poly::zero(ring); bases[q - 1].len()];
                for (j0, &i) in s.iter().enumerate() {
                    let face: Vec<usize> = s.iter().copied().filter(|&k| k != i).collect();
                    let sign = if (j0 + 1) % 2 == 0 { 1 } else { -1 };
                    entries[index[face.as_slice()]] = f[i].scale(&ring.field().from_i64(sign));
                }
                FreeVector::new(ring, entries)
            })
            .collect();
        differentials.push(FreeMatrix::from_columns(ring, bases[q - 1].len(), cols));
    }
    let ranks = bases.iter().map(Vec::len).collect();
    FreeComplex::new(ring, ranks, differentials).expect("Koszul differentials square to zero")
}

/// The two-term complex `R --f--> R`.
pub fn hypersurface_complex(f: &Poly) -> FreeComplex {
    let ring = f.ring();
    let d = FreeMatrix::from_rows(ring, 1, vec![vec![f.clone()]]);
    FreeComplex::new(ring, vec![1, 1], vec![d]).expect("one differential")
}

/// `(A ⊗ B)^{-k} = ⊕_{i+j=k} A^{-i} ⊗ B^{-j}`, blocks by ascending `i`,
/// each block row-major in `(a, b)`. `d(a⊗b) = da⊗b + (-1)^i a⊗db`.
pub fn tensor_complex(a: &FreeComplex, b: &FreeComplex) -> Result<FreeComplex, ComplexError> {
    if !same_ring(&a.ring, &b.ring) {
        return Err(ComplexError::RingMismatch);
    }
    let ring = &a.ring;
    let (na, nb) = (a.length(), b.length());
    let n = na + nb;
    // offsets[k][(i, j)] = start of block (i, j) in degree -k
    let mut offsets: Vec<HashMap<(usize, usize), usize>> = Vec::with_capacity(n + 1);
    let mut ranks = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut off = HashMap::new();
        let mut total = 0;
        for i in k.saturating_sub(nb)..=k.min(na) {
            off.insert((i, k - i), total);
            total += a.ranks[i] * b.ranks[k - i];
        }
        offsets.push(off);
        ranks.push(total);
    }
    let mut differentials = Vec::with_capacity(n);
    for k in 1..=n {
        let mut cols = Vec::with_capacity(ranks[k]);
        for i in k.saturating_sub(nb)..=k.min(na) {
            let j = k - i;
            for ai in 0..a.ranks[i] {
                for bi in 0..b.ranks[j] {
                    let mut entries = vec![Poly::zero(ring); ranks[k - 1]];
                    if i >= 1 {
                        let start = offsets[k - 1][&(i - 1, j)];
                        for (row, p) in a.differential(i).column(ai).entries().iter().enumerate() {
                            if !p.is_zero() {
                                entries[start + row * b.ranks[j] + bi] = p.clone();
                            }
                        }
                    }
                    if j >= 1 {
                        let start = offsets[k - 1][&(i, j - 1)];
                        let sign = ring.field().from_i64(if i % 2 == 0 { 1 } else { -1 });
                        for (row, p) in b.differential(j).column(bi).entries().iter().enumerate() {
                            if !p.is_zero() {
                                let idx = start + ai * b.ranks[j - 1] + row;
                                entries[idx] = &entries[idx] + &p.scale(&sign);
                            }
                        }
                    }
                    cols.push(FreeVector::new(ring, entries));
                }
            }
        }
        differentials.push(FreeMatrix::from_columns(ring, ranks[k - 1], cols));
    }
    FreeComplex::new(ring, ranks, differentials)
}

/// Cone of `t : A -> A`. Degree `-k` is `A^{-k+1} ⊕ A^{-k}` with the
/// shifted copy first, and `d(x, y) = (-dx, t x + dy)`.
pub fn mapping_cone(t: &Poly, a: &FreeComplex) -> FreeComplex {
    let ring = &a.ring;
    let n = a.length() + 1;
    let shifted = |k: usize| if k >= 1 { a.rank(k - 1) } else { 0 };
    let ranks: Vec<usize> = (0..=n).map(|k| shifted(k) + a.rank(k)).collect();
    let minus_one = ring.field().from_i64(-1);
    let mut differentials = Vec::with_capacity(n);
    for k in 1..=n {
        let (s_src, s_tgt) = (shifted(k), shifted(k - 1));
        let mut cols = Vec::with_capacity(ranks[k]);
        for x in 0..s_src {
            let first = if k >= 2 {
                a.differential(k - 1).column(x).entries().iter().map(|p| p.scale(&minus_one)).collect()
            } else {
                Vec::new()
            };
            let mut second = vec![Poly::zero(ring); a.rank(k - 1)];
            second[x] = t.clone();
            debug_assert_eq!(first.len(), s_tgt);
            cols.push(FreeVector::new(ring, first.into_iter().chain(second).collect()));
        }
        for y in 0..a.rank(k) {
            let first = vec![Poly::zero(ring); s_tgt];
            let second = a.differential(k).column(y).entries().to_vec();
            cols.push(FreeVector::new(ring, first.into_iter().chain(second).collect()));
        }
        differentials.push(FreeMatrix::from_columns(ring, ranks[k - 1], cols));
    }
    FreeComplex::new(ring, ranks, differentials).expect("cone differentials square to zero")
}

/// `H^degree(C) = ker ∂^{degree} / im ∂^{degree-1}` for `-N <= degree <= 0`.
pub fn homology(c: &FreeComplex, degree: i64) -> Result<SubquotientModule, ComplexError> {
    let n = c.length();
    if degree > 0 || degree < -(n as i64) {
        return Err(ComplexError::DegreeOutOfRange { degree, length: n });
    }
    let q = degree.unsigned_abs() as usize;
    let ker = if q == 0 { SubquotientModule::free(&c.ring, c.ranks[0]) } else { kernel_module(c.differential(q)) };
    let rels = if q < n { image_module(c.differential(q + 1)).gens().to_vec() } else { Vec::new() };
    Ok(SubquotientModule::new(&c.ring, c.ranks[q], ker.gens().to_vec(), rels)?)
}
