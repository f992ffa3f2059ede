//! Tor modules, multitors of hypersurfaces, Serre intersection
//! multiplicities, regular sequences, and verifiers that certify the
//! comparison isomorphisms between Koszul cohomology of a scaled sequence
//! and its pullback description.

mod report;
mod tor;
mod verify;

use std::sync::Arc;

use thiserror::Error;

pub use report::{Check, Conclusion, VerifierReport};
pub use tor::{serre_multiplicity, tor_pair, tor_report, TorEntry, TorReport};
pub use verify::{
    check_cartesian_square, check_cor_regular, check_prop_affine, check_pullback_square, check_tor_independence, verify_main_theorem_affine,
};

use crate::complexes::{homology, hypersurface_complex, koszul_complex, tensor_complex, ComplexError, FreeComplex};
use crate::groebner::{ideal_groebner, ideal_quotient, FreeVector, GroebnerError};
use crate::modmath::{image_module, kernel_module, quotient_module, scale_submodule, ModuleError, SubquotientModule};
use crate::ring::{Poly, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultitorError {
    #[error("generator {index} of the sequence is zero")]
    ZeroGenerator { index: usize },
    #[error("the scalar x must be nonzero")]
    ZeroScalar,
    #[error("the ideals do not meet in finitely many points")]
    NotZeroDimensional,
    #[error("Tor in degree {degree} has infinite length")]
    InfiniteLength { degree: usize },
    #[error("degree {q} is outside 0..={max}")]
    DegreeOutOfRange { q: usize, max: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Outcome of the iterated colon test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular,
    /// `f_index` (1-based) is a zerodivisor modulo the earlier elements;
    /// `witness` lies in the colon ideal but not in the earlier ideal.
    NotRegular { index: usize, witness: Poly },
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular)
    }
}

/// `f_i` is a nonzerodivisor on `R/(f_1..f_{i-1})` for every `i`, tested
/// by `((f_1..f_{i-1}) : f_i) = (f_1..f_{i-1})`. No properness condition
/// is imposed on the ideal.
pub fn is_regular_sequence(ring: &Arc<PolyRing>, f: &[Poly]) -> Regularity {
    for (i, fi) in f.iter().enumerate() {
        let before = ideal_groebner(ring, &f[..i]);
        if fi.is_zero() {
            if before.contains(&FreeVector::new(ring, vec![Poly::one(ring)])).unwrap_or(false) {
                continue;
            }
            return Regularity::NotRegular { index: i + 1, witness: Poly::one(ring) };
        }
        let colon = ideal_quotient(&f[..i], fi).expect("nonzero divisor argument");
        for g in colon {
            let v = FreeVector::new(ring, vec![g.clone()]);
            if !before.contains(&v).expect("rank one") {
                return Regularity::NotRegular { index: i + 1, witness: g };
            }
        }
    }
    Regularity::Regular
}

fn check_nonzero(f: &[Poly]) -> Result<(), MultitorError> {
    match f.iter().position(Poly::is_zero) {
        Some(i) => Err(MultitorError::ZeroGenerator { index: i + 1 }),
        None => Ok(()),
    }
}

/// `Tor^q(R/(f_1), ..., R/(f_n)) = H^{-q}(K(f))`; zero beyond `q = n`.
pub fn multitor_hypersurfaces(ring: &Arc<PolyRing>, f: &[Poly], q: usize) -> Result<SubquotientModule, MultitorError> {
    check_nonzero(f)?;
    if q > f.len() {
        return Ok(SubquotientModule::zero(ring, 0));
    }
    Ok(homology(&koszul_complex(ring, f), -(q as i64))?)
}

/// The same multitor computed from the tensor product of the two-term
/// complexes `R --f_i--> R`, one factor at a time.
pub fn multitor_via_tensor(ring: &Arc<PolyRing>, f: &[Poly], q: usize) -> Result<SubquotientModule, MultitorError> {
    check_nonzero(f)?;
    let mut c = FreeComplex::concentrated(ring, 1);
    for fi in f {
        c = tensor_complex(&c, &hypersurface_complex(fi))?;
    }
    if q > c.length() {
        return Ok(SubquotientModule::zero(ring, 0));
    }
    Ok(homology(&c, -(q as i64))?)
}

/// `ker ∂_f^{-q}` and `im ∂_f^{-q-1}` as submodules of `∧^q R^n`.
pub fn koszul_cycles_and_boundaries(
    ring: &Arc<PolyRing>,
    f: &[Poly],
    q: usize,
) -> Result<(SubquotientModule, SubquotientModule), MultitorError> {
    let n = f.len();
    if q > n {
        return Err(MultitorError::DegreeOutOfRange { q, max: n });
    }
    let k = koszul_complex(ring, f);
    let ker = if q == 0 { SubquotientModule::free(ring, 1) } else { kernel_module(k.differential(q)) };
    let im = if q < n { image_module(k.differential(q + 1)) } else { SubquotientModule::zero(ring, k.rank(q)) };
    Ok((ker, im))
}

/// `ker ∂_f^{-q} / x · im ∂_f^{-q-1}`.
pub fn scaled_cohomology_model(
    ring: &Arc<PolyRing>,
    f: &[Poly],
    x: &Poly,
    q: usize,
) -> Result<SubquotientModule, MultitorError> {
    if x.is_zero() {
        return Err(MultitorError::ZeroScalar);
    }
    let (ker, im) = koszul_cycles_and_boundaries(ring, f, q)?;
    Ok(quotient_module(&ker, &scale_submodule(&im, x)?)?)
}
