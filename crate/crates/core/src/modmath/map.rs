use std::fmt;

use super::{FreeMatrix, ModuleError, SubquotientModule};
use crate::groebner::{syzygy, FreeVector, LiftBasis};
use crate::ring::same_ring;

/// A homomorphism of subquotients, given by the images of the source
/// generators in the target's ambient free module.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    source: SubquotientModule,
    target: SubquotientModule,
    matrix: FreeMatrix,
}

/// Outcome of [`map_is_bijective`]. Witnesses live in the source ambient
/// (kernel elements) or the target ambient (missed generators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bijectivity {
    Bijective,
    NotInjective(FreeVector),
    NotSurjective(FreeVector),
}

impl Bijectivity {
    pub fn is_bijective(&self) -> bool {
        matches!(self, Bijectivity::Bijective)
    }
}

impl fmt::Display for Bijectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bijectivity::Bijective => write!(f, "Bijective"),
            Bijectivity::NotInjective(w) => write!(f, "NotInjective{w}"),
            Bijectivity::NotSurjective(w) => write!(f, "NotSurjective{w}"),
        }
    }
}

impl ModuleMap {
    /// Checks both well-definedness conditions; fails with
    /// [`ModuleError::IllFormedMap`].
    pub fn new(source: SubquotientModule, target: SubquotientModule, matrix: FreeMatrix) -> Result<Self, ModuleError> {
        let m = Self::new_unchecked(source, target, matrix)?;
        m.check_well_defined()?;
        Ok(m)
    }

    /// Shape checks only.
    pub fn new_unchecked(
        source: SubquotientModule,
        target: SubquotientModule,
        matrix: FreeMatrix,
    ) -> Result<Self, ModuleError> {
        if !same_ring(source.ring(), target.ring()) || !same_ring(source.ring(), matrix.ring()) {
            return Err(ModuleError::RingMismatch);
        }
        if matrix.nrows() != target.ambient_rank() || matrix.ncols() != source.gens().len() {
            return Err(ModuleError::IllFormedMap(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.nrows(),
                matrix.ncols(),
                target.ambient_rank(),
                source.gens().len()
            )));
        }
        Ok(ModuleMap { source, target, matrix })
    }

    pub fn identity(m: &SubquotientModule) -> Self {
        let matrix = FreeMatrix::from_columns(m.ring(), m.ambient_rank(), m.gens().to_vec());
        ModuleMap { source: m.clone(), target: m.clone(), matrix }
    }

    pub fn zero(source: &SubquotientModule, target: &SubquotientModule) -> Self {
        let matrix = FreeMatrix::zero(source.ring(), target.ambient_rank(), source.gens().len());
        ModuleMap { source: source.clone(), target: target.clone(), matrix }
    }

    /// The map induced by the identity of the ambient, e.g. a quotient
    /// projection `N -> N/W` or an inclusion of submodules.
    pub fn canonical(source: &SubquotientModule, target: &SubquotientModule) -> Result<Self, ModuleError> {
        source.check_same_ambient(target)?;
        let matrix = FreeMatrix::from_columns(source.ring(), source.ambient_rank(), source.gens().to_vec());
        Self::new(source.clone(), target.clone(), matrix)
    }

    pub fn source(&self) -> &SubquotientModule {
        &self.source
    }

    pub fn target(&self) -> &SubquotientModule {
        &self.target
    }

    pub fn matrix(&self) -> &FreeMatrix {
        &self.matrix
    }

    pub fn check_well_defined(&self) -> Result<(), ModuleError> {
        let gens_t = self.target.gens_gb();
        for (j, c) in self.matrix.columns().iter().enumerate() {
            if !gens_t.contains(c)? {
                return Err(ModuleError::IllFormedMap(format!("image of generator {j} leaves the target")));
            }
        }
        let pres = self.source.presentation()?;
        let rels_t = self.target.rels_gb();
        for (j, c) in pres.columns().iter().enumerate() {
            if !rels_t.contains(&self.matrix.apply(c))? {
                return Err(ModuleError::IllFormedMap(format!("source relation {j} does not map to zero")));
            }
        }
        Ok(())
    }

    pub fn is_well_defined(&self) -> bool {
        self.check_well_defined().is_ok()
    }

    /// Image of an ambient vector `sum c_i u_i` of the source; `None` when
    /// the vector is not in the span of the source generators.
    pub fn apply(&self, v: &FreeVector) -> Result<Option<FreeVector>, ModuleError> {
        let lb = LiftBasis::new(self.source.ring(), self.source.ambient_rank(), self.source.gens())?;
        Ok(lb.lift(v)?.map(|c| self.matrix.apply(&FreeVector::new(self.source.ring(), c))))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ModuleMap) -> Result<ModuleMap, ModuleError> {
        let lb = LiftBasis::new(other.source.ring(), other.source.ambient_rank(), other.source.gens())?;
        let mut cols = Vec::with_capacity(self.matrix.ncols());
        for (j, c) in self.matrix.columns().iter().enumerate() {
            let coords = lb
                .lift(c)?
                .ok_or_else(|| ModuleError::IllFormedMap(format!("image of generator {j} is not in the next source")))?;
            cols.push(other.matrix.apply(&FreeVector::new(self.source.ring(), coords)));
        }
        let matrix = FreeMatrix::from_columns(self.source.ring(), other.target.ambient_rank(), cols);
        ModuleMap::new_unchecked(self.source.clone(), other.target.clone(), matrix)
    }

    /// Equality as homomorphisms: generator images agree modulo the target
    /// relations.
    pub fn equals(&self, other: &ModuleMap) -> Result<bool, ModuleError> {
        self.source.check_same_ambient(&other.source)?;
        self.target.check_same_ambient(&other.target)?;
        if self.matrix.ncols() != other.matrix.ncols() {
            return Err(ModuleError::IllFormedMap("maps have different source generators".into()));
        }
        let rels = self.target.rels_gb();
        for (a, b) in self.matrix.columns().iter().zip(other.matrix.columns()) {
            if !rels.contains(&a.sub(b))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A fiber product with its two projections.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub module: SubquotientModule,
    pub p1: ModuleMap,
    pub p2: ModuleMap,
}

impl Pullback {
    /// The map `D -> P` induced by `h1 : D -> A` and `h2 : D -> B`.
    pub fn induced_map(&self, h1: &ModuleMap, h2: &ModuleMap) -> Result<ModuleMap, ModuleError> {
        h1.source.check_same_ambient(&h2.source)?;
        let cols = h1.matrix.columns().iter().zip(h2.matrix.columns()).map(|(a, b)| a.concat(b)).collect();
        let matrix = FreeMatrix::from_columns(self.module.ring(), self.module.ambient_rank(), cols);
        ModuleMap::new(h1.source.clone(), self.module.clone(), matrix)
    }
}

/// `{(a, b) : f(a) = g(b)}` inside `ambient_A ⊕ ambient_B`, with `A` first.
pub fn pullback(f: &ModuleMap, g: &ModuleMap) -> Result<Pullback, ModuleError> {
    if f.target.check_same_ambient(&g.target).is_err() || !f.target.same_spans(&g.target)? {
        return Err(ModuleError::TargetMismatch);
    }
    let ring = f.source.ring();
    let (a, b) = (&f.source, &g.source);
    let (ka, kb) = (a.gens().len(), b.gens().len());
    let stacked = f
        .matrix
        .hconcat(&g.matrix.scale(&-crate::ring::Poly::one(ring)))
        .hconcat(&FreeMatrix::from_columns(ring, f.target.ambient_rank(), f.target.rels().to_vec()));
    let syz = syzygy(&stacked);
    let mut first = Vec::new();
    let mut second = Vec::new();
    for s in syz.columns() {
        let pa = FreeVector::combination(ring, a.ambient_rank(), &s.entries()[..ka], a.gens());
        let pb = FreeVector::combination(ring, b.ambient_rank(), &s.entries()[ka..ka + kb], b.gens());
        if pa.is_zero() && pb.is_zero() {
            continue;
        }
        first.push(pa);
        second.push(pb);
    }
    let gens = first.iter().zip(&second).map(|(x, y)| x.concat(y)).collect();
    let zero_a = FreeVector::zero(ring, a.ambient_rank());
    let zero_b = FreeVector::zero(ring, b.ambient_rank());
    let rels = a
        .rels()
        .iter()
        .map(|v| v.concat(&zero_b))
        .chain(b.rels().iter().map(|v| zero_a.concat(v)))
        .collect();
    let module = SubquotientModule::new(ring, a.ambient_rank() + b.ambient_rank(), gens, rels)?;
    let p1 = ModuleMap::new_unchecked(module.clone(), a.clone(), FreeMatrix::from_columns(ring, a.ambient_rank(), first))?;
    let p2 = ModuleMap::new_unchecked(module.clone(), b.clone(), FreeMatrix::from_columns(ring, b.ambient_rank(), second))?;
    Ok(Pullback { module, p1, p2 })
}

/// Certifies a map bijective or produces a witness. Injectivity is tested
/// first.
pub fn map_is_bijective(phi: &ModuleMap) -> Result<Bijectivity, ModuleError> {
    phi.check_well_defined()?;
    let ring = phi.source.ring();
    let (src, tgt) = (&phi.source, &phi.target);
    let k = src.gens().len();

    let vt = FreeMatrix::from_columns(ring, tgt.ambient_rank(), tgt.rels().to_vec());
    let syz = syzygy(&phi.matrix.hconcat(&vt));
    let rels_s = src.rels_gb();
    for s in syz.columns() {
        let w = FreeVector::combination(ring, src.ambient_rank(), &s.entries()[..k], src.gens());
        if !rels_s.contains(&w)? {
            return Ok(Bijectivity::NotInjective(w));
        }
    }

    let mut span = phi.matrix.columns().to_vec();
    span.extend(tgt.rels().iter().cloned());
    let gb = crate::groebner::module_groebner(ring, tgt.ambient_rank(), &span)?;
    for u in tgt.gens() {
        if !gb.contains(u)? {
            return Ok(Bijectivity::NotSurjective(u.clone()));
        }
    }
    Ok(Bijectivity::Bijective)
}

/// An element of `M` killed by `x` but nonzero in `M`, if one exists.
pub fn mult_kernel_witness(m: &SubquotientModule, x: &crate::ring::Poly) -> Result<Option<FreeVector>, ModuleError> {
    let ring = m.ring();
    let k = m.gens().len();
    let mut cols: Vec<FreeVector> = m.gens().iter().map(|u| u.scale(x)).collect();
    cols.extend(m.rels().iter().cloned());
    let syz = syzygy(&FreeMatrix::from_columns(ring, m.ambient_rank(), cols));
    let rels = m.rels_gb();
    for s in syz.columns() {
        let w = FreeVector::combination(ring, m.ambient_rank(), &s.entries()[..k], m.gens());
        if !rels.contains(&w)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Whether multiplication by `x` is injective on `M`.
pub fn mult_injective(m: &SubquotientModule, x: &crate::ring::Poly) -> Result<bool, ModuleError> {
    Ok(mult_kernel_witness(m, x)?.is_none())
}
