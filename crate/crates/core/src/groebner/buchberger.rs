//! Buchberger's algorithm for submodules of `R^rank`, with the
//! Gebauer–Möller pair criteria and the sugar selection strategy.

use std::cmp::Ordering;

use num_traits::One;

use super::mvec::{cancel_lead, full_reduce, lead_reduce, pot_cmp, tail_reduce, MVec};
use crate::ring::{FieldSpec, Monomial, MonomialOrder};

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    comp: usize,
    lcm: Monomial,
    sugar: u64,
}

struct State<'a> {
    field: &'a FieldSpec,
    order: MonomialOrder,
    /// The coprime (product) criterion only holds for ideals.
    ideal_case: bool,
    polys: Vec<MVec>,
    /// Sugar degree of each entry of `polys`.
    sugar: Vec<u64>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn lead(&self, i: usize) -> (usize, &Monomial) {
        let t = self.polys[i].lead().expect("basis elements are nonzero");
        (t.comp, &t.mono)
    }

    fn active_refs(&self) -> Vec<&MVec> {
        self.active.iter().map(|&i| &self.polys[i]).collect()
    }

    fn update(&mut self, h: usize) {
        let (hc, hm) = {
            let (c, m) = self.lead(h);
            (c, m.clone())
        };
        let mut candidates: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .filter(|&&g| self.lead(g).0 == hc)
            .map(|&g| (g, hm.lcm(self.lead(g).1)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while !candidates.is_empty() {
            let (g1, lcm1) = candidates.remove(0);
            let coprime = self.ideal_case && hm.is_coprime(self.lead(g1).1);
            let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&lcm1));
            if coprime || !dominated {
                kept.push((g1, lcm1));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !(self.ideal_case && hm.is_coprime(self.lead(*g).1)))
            .map(|(g, lcm)| {
                let sugar = self.pair_sugar(g, h, &lcm);
                Pair { i: g, j: h, comp: hc, lcm, sugar }
            })
            .collect();

        let polys = &self.polys;
        let lead_of = |i: usize| &polys[i].terms[0].mono;
        self.pairs.retain(|p| {
            if p.comp != hc || !hm.divides(&p.lcm) {
                return true;
            }
            let l1 = lead_of(p.i).lcm(&hm);
            let l2 = lead_of(p.j).lcm(&hm);
            l1 == p.lcm || l2 == p.lcm
        });
        self.pairs.extend(new_pairs);

        let active: Vec<usize> = self
            .active
            .iter()
            .copied()
            .filter(|&g| {
                let (gc, gm) = (polys[g].terms[0].comp, &polys[g].terms[0].mono);
                !(gc == hc && hm.divides(gm))
            })
            .collect();
        self.active = active;
        self.active.push(h);
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u64 {
        let d = lcm.degree();
        let part = |k: usize| self.sugar[k] + d - self.polys[k].terms[0].mono.degree();
        part(i).max(part(j))
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| pot_cmp(order, (a.comp, &a.lcm), (b.comp, &b.lcm)))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_vector(&self, p: &Pair) -> MVec {
        let f = &self.polys[p.i];
        let g = &self.polys[p.j];
        let mf = f.terms[0].mono.quotient_of(&p.lcm).unwrap();
        let mg = g.terms[0].mono.quotient_of(&p.lcm).unwrap();
        let lhs = MVec::default().add_scaled_from(0, f, &One::one(), &mf, self.field, self.order);
        cancel_lead(&lhs, g, &mg, self.field, self.order)
    }

    fn insert(&mut self, v: MVec, sugar: u64) {
        // tails are cleaned up once, in interreduce
        let reduced = full_reduce(&v, &self.active_refs(), self.field, self.order);
        if reduced.is_zero() {
            return;
        }
        self.polys.push(reduced);
        self.sugar.push(sugar);
        let h = self.polys.len() - 1;
        self.update(h);
    }
}

/// Reduced Gröbner basis of the submodule generated by `gens`, sorted by
/// decreasing leading term. The output is canonical for the submodule.
pub(crate) fn reduced_groebner(gens: &[MVec], field: &FieldSpec, order: MonomialOrder, rank: usize) -> Vec<MVec> {
    let mut st = State {
        field,
        order,
        ideal_case: rank == 1,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in gens {
        let sugar = g.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0);
        st.insert(g.clone(), sugar);
    }
    while let Some(pair) = st.select() {
        let s = st.s_vector(&pair);
        st.insert(s, pair.sugar);
    }
    interreduce(st.active.iter().map(|&i| st.polys[i].clone()).collect(), field, order)
}

/// Turns a minimal Gröbner basis into the reduced one.
fn interreduce(basis: Vec<MVec>, field: &FieldSpec, order: MonomialOrder) -> Vec<MVec> {
    let refs: Vec<&MVec> = basis.iter().collect();
    let mut out: Vec<MVec> = basis
        .iter()
        .map(|g| tail_reduce(g, &refs, field, order).monic(field))
        .collect();
    out.sort_by(|a, b| {
        let (ta, tb) = (&a.terms[0], &b.terms[0]);
        pot_cmp(order, (tb.comp, &tb.mono), (ta.comp, &ta.mono))
    });
    debug_assert!(out.windows(2).all(|w| {
        let (ta, tb) = (&w[0].terms[0], &w[1].terms[0]);
        pot_cmp(order, (ta.comp, &ta.mono), (tb.comp, &tb.mono)) == Ordering::Greater
    }));
    out
}

/// Independent re-check of Buchberger's criterion: every S-vector of a pair
/// with matching leading component reduces to zero. A pair `(i, j)` is
/// skipped when some `k` has its lead dividing `lcm(i, j)` and both
/// `lcm(i, k)` and `lcm(j, k)` are proper divisors of it. The S-vector is
/// then a combination of two strictly smaller ones, so the check stays
/// sound by induction on the lcm.
pub(crate) fn satisfies_buchberger_criterion(basis: &[MVec], field: &FieldSpec, order: MonomialOrder) -> bool {
    let polys: Vec<MVec> = basis.iter().map(|g| g.clone().normalized(field)).collect();
    let refs: Vec<&MVec> = polys.iter().collect();
    let lead = |i: usize| (polys[i].terms[0].comp, &polys[i].terms[0].mono);
    let chained = |i: usize, j: usize, lcm: &Monomial| {
        (0..polys.len()).any(|k| {
            let (kc, km) = lead(k);
            if k == i || k == j || kc != lead(i).0 || !km.divides(lcm) {
                return false;
            }
            let (lik, ljk) = (lead(i).1.lcm(km), lead(j).1.lcm(km));
            lik != *lcm && ljk != *lcm
        })
    };
    let st = State {
        field,
        order,
        ideal_case: false,
        polys: polys.clone(),
        sugar: vec![0; polys.len()],
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let ((ci, mi), (cj, mj)) = (lead(i), lead(j));
            if ci != cj {
                continue;
            }
            let lcm = mi.lcm(mj);
            if chained(i, j, &lcm) {
                continue;
            }
            let s = st.s_vector(&Pair { i, j, comp: ci, lcm, sugar: 0 });
            if !lead_reduce(&s, &refs, field, order).is_zero() {
                return false;
            }
        }
    }
    true
}
