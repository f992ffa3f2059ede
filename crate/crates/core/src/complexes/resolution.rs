use std::sync::Arc;

use super::{ComplexError, FreeComplex};
use crate::groebner::{syzygy, FreeVector};
use crate::modmath::FreeMatrix;
use crate::ring::{Poly, PolyRing};

/// Free resolution of `R/I` by iterated syzygies, pruned at every step by
/// pivoting on unit entries.
pub fn free_resolution(ring: &Arc<PolyRing>, ideal: &[Poly], max_len: usize) -> Result<FreeComplex, ComplexError> {
    let gens: Vec<FreeVector> =
        ideal.iter().filter(|p| !p.is_zero()).map(|p| FreeVector::new(ring, vec![p.clone()])).collect();
    if gens.is_empty() {
        return Ok(FreeComplex::concentrated(ring, 1));
    }
    let mut diffs = vec![FreeMatrix::from_columns(ring, 1, gens)];
    minimalize(&mut diffs);
    let mut rank0 = diffs[0].nrows();
    loop {
        let last = diffs.last().expect("at least one differential");
        if last.ncols() == 0 {
            break;
        }
        let syz = syzygy(last);
        if syz.ncols() == 0 {
            break;
        }
        if diffs.len() == max_len {
            return Err(ComplexError::ResolutionTruncated { max_len });
        }
        diffs.push(syz);
        minimalize(&mut diffs);
        rank0 = diffs[0].nrows();
    }
    while diffs.last().is_some_and(|d| d.ncols() == 0) {
        diffs.pop();
    }
    let mut ranks = vec![rank0];
    ranks.extend(diffs.iter().map(FreeMatrix::ncols));
    FreeComplex::new(ring, ranks, diffs)
}

fn unit_entry(d: &FreeMatrix) -> Option<(usize, usize)> {
    (0..d.ncols()).find_map(|c| (0..d.nrows()).find(|&r| d.entry(r, c).is_unit()).map(|r| (r, c)))
}

/// Splits off trivial summands `R --u--> R`. With a unit `u` at `(r, c)` of
/// `d_k`, column operations clear row `r`; afterwards row `c` of `d_{k+1}`
/// and column `r` of `d_{k-1}` vanish in the new bases and are dropped.
fn minimalize(diffs: &mut [FreeMatrix]) {
    for k in 0..diffs.len() {
        while let Some((r, c)) = unit_entry(&diffs[k]) {
            let d = &mut diffs[k];
            let ring = d.ring().clone();
            let field = ring.field().clone();
            let pivot_col = d.column(c).clone();
            let u_inv = field.inv(&d.entry(r, c).constant_term());
            for j in 0..d.ncols() {
                if j == c || d.entry(r, j).is_zero() {
                    continue;
                }
                let factor = d.entry(r, j).scale(&u_inv);
                let updated = d.column(j).sub(&pivot_col.scale(&factor));
                d.set_column(j, updated);
            }
            d.remove_column(c);
            d.remove_row(r);
            if k + 1 < diffs.len() {
                diffs[k + 1].remove_row(c);
            }
            if k > 0 {
                diffs[k - 1].remove_column(r);
            }
        }
    }
}
