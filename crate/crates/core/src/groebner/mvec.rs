//! Flat term lists for module elements under the position-over-term order.
//!
//! Component 0 dominates: `(i, m) > (j, n)` iff `i < j`, or `i == j` and
//! `m > n` in the ring order.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::FreeVector;
use crate::ring::{FieldSpec, Monomial, MonomialOrder, Poly, PolyRing, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct MVec {
    /// Strictly decreasing.
    pub terms: Vec<Term>,
}

pub(crate) fn pot_cmp(order: MonomialOrder, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| order.cmp(a.1, b.1))
}

impl MVec {
    pub fn from_free(v: &FreeVector) -> Self {
        Self::from_free_offset(v, 0)
    }

    /// Places `v` at components `offset..offset + rank`.
    pub fn from_free_offset(v: &FreeVector, offset: usize) -> Self {
        let mut terms = Vec::new();
        for (i, p) in v.entries().iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(Term { comp: i + offset, mono: m.clone(), coeff: c.clone() });
            }
        }
        MVec { terms }
    }

    pub fn to_free(&self, ring: &Arc<PolyRing>, rank: usize) -> FreeVector {
        self.to_free_range(ring, 0, rank)
    }

    /// Components `start..start + rank`, renumbered from zero.
    pub fn to_free_range(&self, ring: &Arc<PolyRing>, start: usize, rank: usize) -> FreeVector {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            if t.comp >= start && t.comp < start + rank {
                buckets[t.comp - start].push((t.mono.clone(), t.coeff.clone()));
            }
        }
        FreeVector::new(
            ring,
            buckets.into_iter().map(|b| Poly::from_sorted_terms(ring, b)).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn monic(mut self, field: &FieldSpec) -> Self {
        if let Some(lc) = self.terms.first().map(|t| t.coeff.clone()) {
            if !lc.is_one() {
                let inv = field.inv(&lc);
                for t in &mut self.terms {
                    t.coeff = field.mul(&t.coeff, &inv);
                }
            }
        }
        self
    }

    fn weight(&self) -> u64 {
        let bits = self.terms.iter().map(|t| t.coeff.numer().bits() + t.coeff.denom().bits()).max().unwrap_or(0);
        self.terms.len() as u64 * bits
    }

    pub fn scaled(mut self, c: &Scalar, field: &FieldSpec) -> Self {
        if !c.is_one() {
            for t in &mut self.terms {
                t.coeff = field.mul(&t.coeff, c);
            }
        }
        self
    }

    /// Monic over `F_p`. Over `Q`, the primitive integer multiple with a
    /// positive leading coefficient, which keeps Buchberger's intermediate
    /// coefficients small.
    pub fn normalized(self, field: &FieldSpec) -> Self {
        if *field != FieldSpec::Rationals || self.is_zero() {
            return self.monic(field);
        }
        let den = self.terms.iter().fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let num = self.terms.iter().fold(BigInt::zero(), |acc, t| acc.gcd(&(t.coeff.numer() * (&den / t.coeff.denom()))));
        let mut c = Scalar::new(den, num);
        if self.terms[0].coeff.is_negative() {
            c = -c;
        }
        self.scaled(&c, field)
    }

    /// `self[start..] + c * m * other`.
    pub fn add_scaled_from(
        &self,
        start: usize,
        other: &MVec,
        c: &Scalar,
        m: &Monomial,
        field: &FieldSpec,
        order: MonomialOrder,
    ) -> MVec {
        let lhs_terms = &self.terms[start..];
        let mut out = Vec::with_capacity(lhs_terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let mut shifted: Option<Term> = None;
        loop {
            if shifted.is_none() && j < other.terms.len() {
                let t = &other.terms[j];
                shifted = Some(Term { comp: t.comp, mono: t.mono.mul(m), coeff: field.mul(&t.coeff, c) });
                j += 1;
            }
            match (lhs_terms.get(i), shifted.as_ref()) {
                (None, None) => break,
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(_)) => out.push(shifted.take().unwrap()),
                (Some(a), Some(b)) => match pot_cmp(order, (a.comp, &a.mono), (b.comp, &b.mono)) {
                    Ordering::Greater => {
                        out.push(a.clone());
                        i += 1;
                    }
                    Ordering::Less => out.push(shifted.take().unwrap()),
                    Ordering::Equal => {
                        let b = shifted.take().unwrap();
                        let s = field.add(&a.coeff, &b.coeff);
                        if !s.is_zero() {
                            out.push(Term { comp: a.comp, mono: b.mono, coeff: s });
                        }
                        i += 1;
                    }
                },
            }
        }
        MVec { terms: out }
    }
}

/// The cheapest basis element whose lead divides `t`, with the cofactor.
/// Cost is term count times coefficient size, which matters over `Q`.
fn find_reducer<'a>(basis: &[&'a MVec], t: &Term) -> Option<(&'a MVec, Monomial)> {
    basis
        .iter()
        .filter_map(|g| {
            let lt = g.lead()?;
            if lt.comp != t.comp {
                return None;
            }
            lt.mono.quotient_of(&t.mono).map(|q| (*g, q))
        })
        .min_by_key(|(g, _)| g.weight())
}

/// `d * p - n * m * g` with `n / d = lc(p) / lc(g)`, which cancels the
/// leading term of `p` against `m * g`. Over `Q` the multipliers are
/// integers, so integer inputs stay integral.
pub(crate) fn cancel_lead(p: &MVec, g: &MVec, m: &Monomial, field: &FieldSpec, order: MonomialOrder) -> MVec {
    let r = field.div(&p.terms[0].coeff, &g.terms[0].coeff);
    let (n, d) = match field {
        FieldSpec::Rationals => (Scalar::from_integer(r.numer().clone()), Scalar::from_integer(r.denom().clone())),
        FieldSpec::PrimeField(_) => (r, Scalar::one()),
    };
    p.clone().scaled(&d, field).add_scaled_from(0, g, &field.neg(&n), m, field, order)
}

/// Reduces only the leading term until it is irreducible or the vector is
/// zero. The result is determined up to a unit. Enough for zero tests and
/// for Buchberger's inner loop.
pub(crate) fn lead_reduce(f: &MVec, basis: &[&MVec], field: &FieldSpec, order: MonomialOrder) -> MVec {
    let mut p = f.clone().normalized(field);
    while let Some(t) = p.terms.first() {
        let reducer = find_reducer(basis, t);
        let Some((g, q)) = reducer else { break };
        p = cancel_lead(&p, g, &q, field, order).normalized(field);
    }
    p
}

const CONTENT_PERIOD: usize = 4;

/// Divides integer coefficients by their common gcd.
fn remove_content(a: &mut [Term], b: &mut [Term]) {
    let g = a.iter().chain(b.iter()).fold(BigInt::zero(), |acc, t| acc.gcd(t.coeff.numer()));
    if g > BigInt::one() {
        for t in a.iter_mut().chain(b.iter_mut()) {
            t.coeff = Scalar::from_integer(t.coeff.numer() / &g);
        }
    }
}

/// Full normal form of `f` with respect to `basis`, determined up to a
/// unit. Fraction-free over `Q`.
pub(crate) fn full_reduce(f: &MVec, basis: &[&MVec], field: &FieldSpec, order: MonomialOrder) -> MVec {
    reduce_from(f, basis, field, order, false)
}

/// Like [`full_reduce`] but keeps the leading term of `f` in place.
pub(crate) fn tail_reduce(f: &MVec, basis: &[&MVec], field: &FieldSpec, order: MonomialOrder) -> MVec {
    reduce_from(f, basis, field, order, true)
}

fn reduce_from(f: &MVec, basis: &[&MVec], field: &FieldSpec, order: MonomialOrder, keep_lead: bool) -> MVec {
    let mut p = f.clone().normalized(field);
    let mut rem: Vec<Term> = Vec::new();
    if keep_lead && !p.is_zero() {
        rem.push(p.terms.remove(0));
    }
    let mut steps = 0usize;
    while !p.is_zero() {
        if *field == FieldSpec::Rationals && steps % CONTENT_PERIOD == CONTENT_PERIOD - 1 {
            remove_content(&mut rem, &mut p.terms);
        }
        steps += 1;
        let t = &p.terms[0];
        let reducer = find_reducer(basis, t);
        match reducer {
            Some((g, q)) => {
                let r = field.div(&t.coeff, &g.terms[0].coeff);
                let (n, d) = match field {
                    FieldSpec::Rationals => (Scalar::from_integer(r.numer().clone()), Scalar::from_integer(r.denom().clone())),
                    FieldSpec::PrimeField(_) => (r, Scalar::one()),
                };
                if !d.is_one() {
                    for u in &mut rem {
                        u.coeff = field.mul(&u.coeff, &d);
                    }
                }
                p = p.scaled(&d, field).add_scaled_from(0, g, &field.neg(&n), &q, field, order);
            }
            None => {
                rem.push(p.terms.remove(0));
            }
        }
    }
    MVec { terms: rem }.normalized(field)
}

/// Full normal form of `f` with respect to `basis`.
pub(crate) fn normal_form(f: &MVec, basis: &[&MVec], field: &FieldSpec, order: MonomialOrder) -> MVec {
    let mut p = f.clone();
    let mut pos = 0;
    let mut rem = Vec::new();
    while pos < p.terms.len() {
        let t = &p.terms[pos];
        let reducer = find_reducer(basis, t);
        match reducer {
            Some((g, q)) => {
                let c = field.neg(&field.div(&t.coeff, &g.terms[0].coeff));
                p = p.add_scaled_from(pos, g, &c, &q, field, order);
                pos = 0;
            }
            None => {
                rem.push(t.clone());
                pos += 1;
            }
        }
    }
    MVec { terms: rem }
}
