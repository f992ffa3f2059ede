//! Subquotient modules `<U>/<V>` of free modules, homomorphisms between
//! them, and the decision procedures used to certify commutative squares:
//! equality, intersection, length, fiber products and bijectivity.

mod map;
mod matrix;
mod rank;
mod subquotient;

use thiserror::Error;

pub use map::{map_is_bijective, mult_injective, mult_kernel_witness, pullback, Bijectivity, ModuleMap, Pullback};
pub use matrix::FreeMatrix;
pub use rank::generic_rank;
pub use subquotient::SubquotientModule;

use crate::groebner::{module_groebner, syzygy, FreeVector, GroebnerError, Length};
use crate::ring::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("modules live over different rings")]
    RingMismatch,
    #[error("ambient ranks differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("operation needs a submodule without relations")]
    HasRelations,
    #[error("submodule is not contained in the module")]
    NotContained,
    #[error("relation {relation} is not in the span of the generators")]
    IllFormed { relation: usize },
    #[error("ill-formed map: {0}")]
    IllFormedMap(String),
    #[error("module is not supported only at the origin; length is not local")]
    LengthNotLocal,
    #[error("maps do not share a target")]
    TargetMismatch,
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// `ker(m)` as a submodule of the source `R^ncols`.
pub fn kernel_module(m: &FreeMatrix) -> SubquotientModule {
    let syz = syzygy(m);
    SubquotientModule::submodule(m.ring(), m.ncols(), syz.columns().to_vec()).expect("syzygies have source rank")
}

/// `im(m)` as a submodule of the target `R^nrows`.
pub fn image_module(m: &FreeMatrix) -> SubquotientModule {
    SubquotientModule::submodule(m.ring(), m.nrows(), m.columns().to_vec()).expect("columns have target rank")
}

pub fn scale_submodule(m: &SubquotientModule, x: &Poly) -> Result<SubquotientModule, ModuleError> {
    if m.has_relations() {
        return Err(ModuleError::HasRelations);
    }
    SubquotientModule::submodule(m.ring(), m.ambient_rank(), m.gens().iter().map(|u| u.scale(x)).collect())
}

pub fn submodule_equal(a: &SubquotientModule, b: &SubquotientModule) -> Result<bool, ModuleError> {
    a.check_same_ambient(b)?;
    if a.has_relations() || b.has_relations() {
        return Err(ModuleError::HasRelations);
    }
    Ok(a.gens_gb() == b.gens_gb())
}

/// `<U_A> ∩ <U_B>` from the syzygies of `[U_A | -U_B]`.
pub fn submodule_intersect(a: &SubquotientModule, b: &SubquotientModule) -> Result<SubquotientModule, ModuleError> {
    a.check_same_ambient(b)?;
    if a.has_relations() || b.has_relations() {
        return Err(ModuleError::HasRelations);
    }
    let ring = a.ring();
    let mut cols = a.gens().to_vec();
    cols.extend(b.gens().iter().map(FreeVector::neg));
    let syz = syzygy(&FreeMatrix::from_columns(ring, a.ambient_rank(), cols));
    let k = a.gens().len();
    let gens = syz
        .columns()
        .iter()
        .map(|s| FreeVector::combination(ring, a.ambient_rank(), &s.entries()[..k], a.gens()))
        .collect();
    SubquotientModule::submodule(ring, a.ambient_rank(), gens)
}

/// Union of generators and of relations.
pub fn submodule_sum(a: &SubquotientModule, b: &SubquotientModule) -> Result<SubquotientModule, ModuleError> {
    a.check_same_ambient(b)?;
    let gens = a.gens().iter().chain(b.gens()).cloned().collect();
    let rels = a.rels().iter().chain(b.rels()).cloned().collect();
    SubquotientModule::new(a.ring(), a.ambient_rank(), gens, rels)
}

/// `N / W` as `(U_N, V_N ∪ U_W)`.
pub fn quotient_module(n: &SubquotientModule, w: &SubquotientModule) -> Result<SubquotientModule, ModuleError> {
    n.check_same_ambient(w)?;
    if !n.gens_gb().contains_all(w.gens())? {
        return Err(ModuleError::NotContained);
    }
    let rels = n.rels().iter().chain(w.gens()).cloned().collect();
    SubquotientModule::new(n.ring(), n.ambient_rank(), n.gens().to_vec(), rels)
}

pub fn presentation(m: &SubquotientModule) -> Result<FreeMatrix, ModuleError> {
    m.presentation().cloned()
}

pub fn module_length(m: &SubquotientModule) -> Result<Length, ModuleError> {
    m.length()
}

/// `dim_k R^r / <cols>` of a presentation matrix.
pub fn cokernel_dim(p: &FreeMatrix) -> Result<Length, ModuleError> {
    Ok(module_groebner(p.ring(), p.nrows(), p.columns())?.quotient_dim())
}

#[cfg(test)]
mod tests;
