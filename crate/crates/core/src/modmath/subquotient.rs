use std::fmt;
use std::sync::{Arc, OnceLock};

use super::{generic_rank, FreeMatrix, ModuleError};
use crate::groebner::{module_groebner, FreeVector, Length, LiftBasis, ModuleGb};
use crate::ring::{same_ring, Monomial, Poly, PolyRing};

/// The module `<U> / <V>` with `V ⊆ <U> ⊆ R^ambient_rank`.
///
/// The presentation is computed on first use and cached.
#[derive(Clone)]
pub struct SubquotientModule {
    ring: Arc<PolyRing>,
    ambient_rank: usize,
    gens: Vec<FreeVector>,
    rels: Vec<FreeVector>,
    presentation: OnceLock<FreeMatrix>,
}

impl SubquotientModule {
    pub fn new(
        ring: &Arc<PolyRing>,
        ambient_rank: usize,
        gens: Vec<FreeVector>,
        rels: Vec<FreeVector>,
    ) -> Result<Self, ModuleError> {
        for v in gens.iter().chain(&rels) {
            if !same_ring(v.ring(), ring) {
                return Err(ModuleError::RingMismatch);
            }
            if v.rank() != ambient_rank {
                return Err(ModuleError::AmbientMismatch { left: ambient_rank, right: v.rank() });
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let rels = rels.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(SubquotientModule { ring: ring.clone(), ambient_rank, gens, rels, presentation: OnceLock::new() })
    }

    pub fn submodule(ring: &Arc<PolyRing>, ambient_rank: usize, gens: Vec<FreeVector>) -> Result<Self, ModuleError> {
        Self::new(ring, ambient_rank, gens, Vec::new())
    }

    /// All of `R^rank`.
    pub fn free(ring: &Arc<PolyRing>, rank: usize) -> Self {
        let gens = (0..rank).map(|i| FreeVector::basis(ring, rank, i)).collect();
        Self::new(ring, rank, gens, Vec::new()).unwrap()
    }

    pub fn zero(ring: &Arc<PolyRing>, ambient_rank: usize) -> Self {
        Self::new(ring, ambient_rank, Vec::new(), Vec::new()).unwrap()
    }

    /// `R^rank / <rels>`.
    pub fn cokernel(ring: &Arc<PolyRing>, rank: usize, rels: Vec<FreeVector>) -> Result<Self, ModuleError> {
        let gens = (0..rank).map(|i| FreeVector::basis(ring, rank, i)).collect();
        Self::new(ring, rank, gens, rels)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn gens(&self) -> &[FreeVector] {
        &self.gens
    }

    pub fn rels(&self) -> &[FreeVector] {
        &self.rels
    }

    pub fn has_relations(&self) -> bool {
        !self.rels.is_empty()
    }

    pub fn gens_gb(&self) -> ModuleGb {
        module_groebner(&self.ring, self.ambient_rank, &self.gens).expect("shapes checked at construction")
    }

    pub fn rels_gb(&self) -> ModuleGb {
        module_groebner(&self.ring, self.ambient_rank, &self.rels).expect("shapes checked at construction")
    }

    /// Checks `V ⊆ <U>`.
    pub fn is_well_formed(&self) -> bool {
        self.gens_gb().contains_all(&self.rels).expect("shapes checked at construction")
    }

    /// True when every generator lies in `<V>`.
    pub fn is_zero(&self) -> bool {
        self.rels_gb().contains_all(&self.gens).expect("shapes checked at construction")
    }

    pub(crate) fn check_same_ambient(&self, other: &Self) -> Result<(), ModuleError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(ModuleError::RingMismatch);
        }
        if self.ambient_rank != other.ambient_rank {
            return Err(ModuleError::AmbientMismatch { left: self.ambient_rank, right: other.ambient_rank });
        }
        Ok(())
    }

    /// Matrix `P` with `coker(P) ≅ M` via `e_i ↦ u_i`: lifts of the
    /// relations through `U`, followed by the syzygies of `U`.
    pub fn presentation(&self) -> Result<&FreeMatrix, ModuleError> {
        if let Some(p) = self.presentation.get() {
            return Ok(p);
        }
        let lb = LiftBasis::new(&self.ring, self.ambient_rank, &self.gens)?;
        let mut cols = Vec::with_capacity(self.rels.len());
        for (i, v) in self.rels.iter().enumerate() {
            let coords = lb.lift(v)?.ok_or(ModuleError::IllFormed { relation: i })?;
            cols.push(FreeVector::new(&self.ring, coords));
        }
        cols.extend(lb.syzygies());
        let cols = cols.into_iter().filter(|c| !c.is_zero()).collect();
        let p = FreeMatrix::from_columns(&self.ring, self.gens.len(), cols);
        Ok(self.presentation.get_or_init(|| p))
    }

    /// `dim_k M`, without any support condition.
    pub fn vector_space_dim(&self) -> Result<Length, ModuleError> {
        let p = self.presentation()?;
        Ok(module_groebner(&self.ring, p.nrows(), p.columns())?.quotient_dim())
    }

    /// Length of `M` as a module over the local ring at the origin.
    ///
    /// Computed as `dim_k M`, which agrees with the local length only when
    /// `M` is supported at the origin alone; anything else is rejected with
    /// [`ModuleError::LengthNotLocal`].
    pub fn length(&self) -> Result<Length, ModuleError> {
        let p = self.presentation()?;
        let gb = module_groebner(&self.ring, p.nrows(), p.columns())?;
        let len = gb.quotient_dim();
        let Length::Finite(n) = len else {
            return Ok(len);
        };
        if n == 0 {
            return Ok(len);
        }
        // supported at the origin iff every variable acts nilpotently, and
        // the nilpotency index is bounded by the length
        let exp = u32::try_from(n).map_err(|_| ModuleError::LengthNotLocal)?;
        let nvars = self.ring.nvars();
        for var in 0..nvars {
            let power = Poly::monomial(&self.ring, Monomial::var(nvars, var, exp), num_traits::One::one());
            for comp in 0..p.nrows() {
                let v = FreeVector::basis(&self.ring, p.nrows(), comp).scale(&power);
                if !gb.contains(&v)? {
                    return Err(ModuleError::LengthNotLocal);
                }
            }
        }
        Ok(len)
    }

    /// Rank over the fraction field: `rank <U> - rank <V>`.
    pub fn generic_rank(&self) -> usize {
        let u = FreeMatrix::from_columns(&self.ring, self.ambient_rank, self.gens.clone());
        let v = FreeMatrix::from_columns(&self.ring, self.ambient_rank, self.rels.clone());
        generic_rank(&u) - generic_rank(&v)
    }

    /// Same `<U>` and same `<V>`.
    pub fn same_spans(&self, other: &Self) -> Result<bool, ModuleError> {
        self.check_same_ambient(other)?;
        Ok(self.gens_gb() == other.gens_gb() && self.rels_gb() == other.rels_gb())
    }

    /// `A ⊕ B` in `R^(a + b)`, `self` first.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, ModuleError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(ModuleError::RingMismatch);
        }
        let left = |v: &FreeVector| v.concat(&FreeVector::zero(&self.ring, other.ambient_rank));
        let right = |v: &FreeVector| FreeVector::zero(&self.ring, self.ambient_rank).concat(v);
        let gens = self.gens.iter().map(left).chain(other.gens.iter().map(right)).collect();
        let rels = self.rels.iter().map(left).chain(other.rels.iter().map(right)).collect();
        Self::new(&self.ring, self.ambient_rank + other.ambient_rank, gens, rels)
    }

    /// Text block listing reduced Gröbner bases of `<U>` and `<V>`.
    pub fn describe(&self) -> String {
        let show = |gb: &ModuleGb| {
            if gb.is_zero() {
                "0".to_string()
            } else {
                gb.basis().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            }
        };
        format!(
            "ambient R^{}\n  generators: {}\n  relations:  {}",
            self.ambient_rank,
            show(&self.gens_gb()),
            show(&self.rels_gb())
        )
    }
}

impl fmt::Debug for SubquotientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubquotientModule")
            .field("ambient_rank", &self.ambient_rank)
            .field("gens", &self.gens)
            .field("rels", &self.rels)
            .finish()
    }
}
