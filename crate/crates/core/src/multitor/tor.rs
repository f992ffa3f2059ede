use std::fmt;
use std::sync::Arc;

use super::MultitorError;
use crate::complexes::{free_resolution, FreeComplex};
use crate::groebner::{is_zero_dimensional, syzygy, FreeVector, Length};
use crate::modmath::{FreeMatrix, SubquotientModule};
use crate::ring::{Poly, PolyRing};

fn resolution_bound(ring: &PolyRing) -> usize {
    ring.nvars() + 2
}

/// `J · e_i` for every generator of `J` and every basis vector of `R^rank`.
fn ideal_times_free(ring: &Arc<PolyRing>, j: &[Poly], rank: usize) -> Vec<FreeVector> {
    (0..rank)
        .flat_map(|i| j.iter().filter(|g| !g.is_zero()).map(move |g| FreeVector::basis(ring, rank, i).scale(g)))
        .collect()
}

/// `H^{-q}` of `F ⊗ R/J` where `F` resolves `R/I`, as a subquotient of `F_q`.
fn tor_from_resolution(res: &FreeComplex, j: &[Poly], q: usize) -> SubquotientModule {
    let ring = res.ring();
    if q > res.length() {
        return SubquotientModule::zero(ring, 0);
    }
    let rq = res.rank(q);
    let gens = if q == 0 {
        (0..rq).map(|i| FreeVector::basis(ring, rq, i)).collect()
    } else {
        // cycles modulo J: d_q(a) ∈ J F_{q-1}
        let d = res.differential(q);
        let stacked =
            d.hconcat(&FreeMatrix::from_columns(ring, d.nrows(), ideal_times_free(ring, j, res.rank(q - 1))));
        syzygy(&stacked).columns().iter().map(|s| s.slice(0..rq)).collect()
    };
    let mut rels = ideal_times_free(ring, j, rq);
    if q < res.length() {
        rels.extend(res.differential(q + 1).columns().iter().cloned());
    }
    SubquotientModule::new(ring, rq, gens, rels).expect("shapes follow the resolution")
}

/// `Tor_q(R/I, R/J)`, resolving the first argument.
pub fn tor_pair(ring: &Arc<PolyRing>, i: &[Poly], j: &[Poly], q: usize) -> Result<SubquotientModule, MultitorError> {
    let res = free_resolution(ring, i, resolution_bound(ring))?;
    Ok(tor_from_resolution(&res, j, q))
}

#[derive(Clone, Debug)]
pub struct TorEntry {
    pub q: usize,
    pub module: SubquotientModule,
    pub length: Length,
    pub generic_rank: usize,
}

/// Tor modules in degrees `0..=qmax`, with the path that produced them.
#[derive(Clone, Debug)]
pub struct TorReport {
    pub entries: Vec<TorEntry>,
    pub resolution_ranks: Vec<usize>,
    pub provenance: String,
}

impl TorReport {
    pub fn length(&self, q: usize) -> Option<Length> {
        self.entries.get(q).map(|e| e.length)
    }
}

impl fmt::Display for TorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "provenance: {}", self.provenance)?;
        let ranks: Vec<String> = self.resolution_ranks.iter().map(ToString::to_string).collect();
        writeln!(f, "resolution ranks: {}", ranks.join(" "))?;
        for e in &self.entries {
            writeln!(f, "Tor_{}: length {}, generic rank {}", e.q, e.length, e.generic_rank)?;
            for line in e.module.describe().lines() {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}

/// Tor modules with local lengths; lengths off the origin are an error.
pub fn tor_report(ring: &Arc<PolyRing>, i: &[Poly], j: &[Poly], qmax: usize) -> Result<TorReport, MultitorError> {
    let res = free_resolution(ring, i, resolution_bound(ring))?;
    let mut entries = Vec::with_capacity(qmax + 1);
    for q in 0..=qmax {
        let module = tor_from_resolution(&res, j, q);
        let length = module.length()?;
        let generic_rank = module.generic_rank();
        entries.push(TorEntry { q, module, length, generic_rank });
    }
    Ok(TorReport {
        entries,
        resolution_ranks: res.ranks().to_vec(),
        provenance: "minimal free resolution of the first ideal tensored with the second quotient".into(),
    })
}

/// `Σ (-1)^q length Tor_q(R/I, R/J)`.
pub fn serre_multiplicity(ring: &Arc<PolyRing>, i: &[Poly], j: &[Poly]) -> Result<i64, MultitorError> {
    let both: Vec<Poly> = i.iter().chain(j).cloned().collect();
    if !is_zero_dimensional(ring, &both) {
        return Err(MultitorError::NotZeroDimensional);
    }
    let res = free_resolution(ring, i, resolution_bound(ring))?;
    let mut total = 0i64;
    for q in 0..=res.length() {
        let len = tor_from_resolution(&res, j, q)
            .length()?
            .finite()
            .ok_or(MultitorError::InfiniteLength { degree: q })?;
        let len = i64::try_from(len).expect("lengths fit in i64");
        total += if q % 2 == 0 { len } else { -len };
    }
    Ok(total)
}
