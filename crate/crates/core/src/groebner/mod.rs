//! Gröbner bases of submodules of free modules, normal forms, lifting,
//! syzygies and the ideal-theoretic decision procedures built on them.
//!
//! Module elements are ordered position-over-term with component 0
//! dominant. Syzygies and lifts use the same trick: the generators `u_i`
//! are embedded as `(u_i, e_i)` in `R^(rank + k)`, so one Gröbner basis
//! computation yields both the syzygy module (elements whose first `rank`
//! components vanish) and a lifting procedure for membership.

mod buchberger;
mod mvec;
mod vector;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use vector::FreeVector;

use crate::modmath::FreeMatrix;
use crate::ring::{same_ring, Monomial, Poly, PolyRing};
use mvec::MVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("expected vectors of rank {expected}, found rank {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("vectors belong to different rings")]
    RingMismatch,
    #[error("ideal quotient by the zero polynomial")]
    ZeroDivisorArgument,
    #[error("quotient ring is not finite dimensional")]
    NotFiniteDimensional,
}

/// Vector-space dimension of a quotient, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => write!(f, "infinite"),
        }
    }
}

fn check_vectors(ring: &Arc<PolyRing>, rank: usize, vs: &[FreeVector]) -> Result<(), GroebnerError> {
    for v in vs {
        if !same_ring(v.ring(), ring) {
            return Err(GroebnerError::RingMismatch);
        }
        if v.rank() != rank {
            return Err(GroebnerError::RankMismatch { expected: rank, found: v.rank() });
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of a submodule of `R^rank`.
#[derive(Clone, Debug)]
pub struct ModuleGb {
    ring: Arc<PolyRing>,
    rank: usize,
    basis: Vec<FreeVector>,
    elems: Vec<MVec>,
}

impl PartialEq for ModuleGb {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.rank == other.rank && self.elems == other.elems
    }
}

impl Eq for ModuleGb {}

impl ModuleGb {
    pub fn compute(ring: &Arc<PolyRing>, rank: usize, gens: &[FreeVector]) -> Result<Self, GroebnerError> {
        check_vectors(ring, rank, gens)?;
        let mvecs: Vec<MVec> = gens.iter().map(MVec::from_free).collect();
        let elems = buchberger::reduced_groebner(&mvecs, ring.field(), ring.order(), rank);
        let basis = elems.iter().map(|e| e.to_free(ring, rank)).collect();
        Ok(ModuleGb { ring: ring.clone(), rank, basis, elems })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis(&self) -> &[FreeVector] {
        &self.basis
    }

    /// The stored basis is always reduced.
    pub fn is_reduced(&self) -> bool {
        true
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Leading terms as `(component, monomial)`.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elems.iter().map(|e| (e.terms[0].comp, e.terms[0].mono.clone())).collect()
    }

    pub fn normal_form(&self, v: &FreeVector) -> Result<FreeVector, GroebnerError> {
        check_vectors(&self.ring, self.rank, std::slice::from_ref(v))?;
        let refs: Vec<&MVec> = self.elems.iter().collect();
        let r = mvec::normal_form(&MVec::from_free(v), &refs, self.ring.field(), self.ring.order());
        Ok(r.to_free(&self.ring, self.rank))
    }

    pub fn contains(&self, v: &FreeVector) -> Result<bool, GroebnerError> {
        Ok(self.normal_form(v)?.is_zero())
    }

    pub fn contains_all(&self, vs: &[FreeVector]) -> Result<bool, GroebnerError> {
        for v in vs {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Re-checks Buchberger's criterion on the stored basis.
    pub fn verify_criterion(&self) -> bool {
        buchberger::satisfies_buchberger_criterion(&self.elems, self.ring.field(), self.ring.order())
    }

    /// Checks the reduced-basis conditions: pairwise non-divisible leading
    /// terms, monic, and no term divisible by another element's leading term.
    pub fn verify_reduced(&self) -> bool {
        let lts = self.leading_terms();
        self.elems.iter().enumerate().all(|(i, e)| {
            e.terms[0].coeff == num_traits::One::one()
                && e.terms.iter().enumerate().all(|(k, t)| {
                    lts.iter().enumerate().all(|(j, (c, m))| {
                        (k == 0 && i == j) || *c != t.comp || !m.divides(&t.mono)
                    })
                })
        })
    }

    /// `dim_k` of `R^rank / M`: standard monomials summed over components.
    pub fn quotient_dim(&self) -> Length {
        let nvars = self.ring.nvars();
        let lts = self.leading_terms();
        let mut total = 0u64;
        for comp in 0..self.rank {
            let in_comp: Vec<&Monomial> = lts.iter().filter(|(c, _)| *c == comp).map(|(_, m)| m).collect();
            if in_comp.iter().any(|m| m.is_one()) {
                continue;
            }
            let bounded = (0..nvars).all(|v| in_comp.iter().any(|m| matches!(m.pure_power(), Some((i, _)) if i == v)));
            if !bounded {
                return Length::Infinite;
            }
            total += count_standard(&in_comp, nvars);
        }
        Length::Finite(total)
    }
}

/// Counts monomials not divisible by any of `lts`; the set must be finite.
fn count_standard(lts: &[&Monomial], nvars: usize) -> u64 {
    fn rec(exps: &mut Vec<u32>, var: usize, lts: &[&Monomial]) -> u64 {
        if var == exps.len() {
            return 1;
        }
        let mut count = 0;
        loop {
            let m = Monomial::new(exps.clone());
            if lts.iter().any(|lt| lt.divides(&m)) {
                break;
            }
            count += rec(exps, var + 1, lts);
            exps[var] += 1;
        }
        exps[var] = 0;
        count
    }
    rec(&mut vec![0; nvars], 0, lts)
}

pub fn module_groebner(ring: &Arc<PolyRing>, rank: usize, gens: &[FreeVector]) -> Result<ModuleGb, GroebnerError> {
    ModuleGb::compute(ring, rank, gens)
}

pub fn normal_form(v: &FreeVector, gb: &ModuleGb) -> Result<FreeVector, GroebnerError> {
    gb.normal_form(v)
}

/// Gröbner basis of `{(u_i, e_i)}` for a fixed generator list; answers
/// lifting and syzygy questions about the generators.
#[derive(Clone, Debug)]
pub struct LiftBasis {
    ring: Arc<PolyRing>,
    rank: usize,
    ngens: usize,
    gens: Vec<FreeVector>,
    elems: Vec<MVec>,
}

impl LiftBasis {
    pub fn new(ring: &Arc<PolyRing>, rank: usize, gens: &[FreeVector]) -> Result<Self, GroebnerError> {
        check_vectors(ring, rank, gens)?;
        let k = gens.len();
        let ext: Vec<MVec> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| MVec::from_free(&g.concat(&FreeVector::basis(ring, k, i))))
            .collect();
        let elems = buchberger::reduced_groebner(&ext, ring.field(), ring.order(), rank + k);
        Ok(LiftBasis { ring: ring.clone(), rank, ngens: k, gens: gens.to_vec(), elems })
    }

    pub fn generators(&self) -> &[FreeVector] {
        &self.gens
    }

    /// Coordinates `c` with `sum c_i u_i = v`, or `None` if `v` is not in
    /// the submodule.
    pub fn lift(&self, v: &FreeVector) -> Result<Option<Vec<Poly>>, GroebnerError> {
        check_vectors(&self.ring, self.rank, std::slice::from_ref(v))?;
        let padded = v.concat(&FreeVector::zero(&self.ring, self.ngens));
        let refs: Vec<&MVec> = self.elems.iter().collect();
        let r = mvec::normal_form(&MVec::from_free(&padded), &refs, self.ring.field(), self.ring.order());
        if r.terms.iter().any(|t| t.comp < self.rank) {
            return Ok(None);
        }
        let coords: Vec<Poly> = r
            .to_free_range(&self.ring, self.rank, self.ngens)
            .into_entries()
            .into_iter()
            .map(|p| -p)
            .collect();
        debug_assert_eq!(
            &FreeVector::combination(&self.ring, self.rank, &coords, &self.gens),
            v,
            "lift must re-expand exactly"
        );
        Ok(Some(coords))
    }

    pub fn contains(&self, v: &FreeVector) -> Result<bool, GroebnerError> {
        Ok(self.lift(v)?.is_some())
    }

    /// Generators of the syzygy module of the generators, in `R^k`.
    pub fn syzygies(&self) -> Vec<FreeVector> {
        self.elems
            .iter()
            .filter(|e| e.terms[0].comp >= self.rank)
            .map(|e| e.to_free_range(&self.ring, self.rank, self.ngens))
            .collect()
    }
}

pub fn membership_with_lift(v: &FreeVector, gens: &[FreeVector]) -> Result<Option<Vec<Poly>>, GroebnerError> {
    LiftBasis::new(v.ring(), v.rank(), gens)?.lift(v)
}

/// Generators of the kernel of `m : R^cols -> R^rows`, as the columns of a
/// `cols x s` matrix.
pub fn syzygy(m: &FreeMatrix) -> FreeMatrix {
    let lb = LiftBasis::new(m.ring(), m.nrows(), m.columns()).expect("matrix columns are consistent");
    FreeMatrix::from_columns(m.ring(), m.ncols(), lb.syzygies())
}

fn as_vectors(ring: &Arc<PolyRing>, polys: &[Poly]) -> Vec<FreeVector> {
    polys.iter().map(|p| FreeVector::new(ring, vec![p.clone()])).collect()
}

/// Reduced Gröbner basis of an ideal. `ring` is needed for the empty list.
pub fn ideal_groebner(ring: &Arc<PolyRing>, gens: &[Poly]) -> ModuleGb {
    ModuleGb::compute(ring, 1, &as_vectors(ring, gens)).expect("ideal generators share the ring")
}

/// Reduced basis polynomials of an ideal.
pub fn ideal_basis(ring: &Arc<PolyRing>, gens: &[Poly]) -> Vec<Poly> {
    ideal_groebner(ring, gens).basis().iter().map(|v| v.entry(0).clone()).collect()
}

/// `(I : f) = {g : f g in I}`, returned as a reduced Gröbner basis.
pub fn ideal_quotient(ideal: &[Poly], f: &Poly) -> Result<Vec<Poly>, GroebnerError> {
    if f.is_zero() {
        return Err(GroebnerError::ZeroDivisorArgument);
    }
    let ring = f.ring();
    let mut row = vec![f.clone()];
    row.extend(ideal.iter().cloned());
    let m = FreeMatrix::from_columns(ring, 1, as_vectors(ring, &row));
    let syz = syzygy(&m);
    let firsts: Vec<Poly> = syz.columns().iter().map(|c| c.entry(0).clone()).collect();
    Ok(ideal_basis(ring, &firsts))
}

pub fn ideals_equal(ring: &Arc<PolyRing>, a: &[Poly], b: &[Poly]) -> bool {
    ideal_groebner(ring, a) == ideal_groebner(ring, b)
}

/// Whether `R/I` is finite dimensional over the base field.
pub fn is_zero_dimensional(ring: &Arc<PolyRing>, ideal: &[Poly]) -> bool {
    ideal_groebner(ring, ideal).quotient_dim() != Length::Infinite
}

/// `dim_k R/I`.
pub fn quotient_dim(ring: &Arc<PolyRing>, ideal: &[Poly]) -> Result<u64, GroebnerError> {
    ideal_groebner(ring, ideal).quotient_dim().finite().ok_or(GroebnerError::NotFiniteDimensional)
}

#[cfg(test)]
mod tests;
