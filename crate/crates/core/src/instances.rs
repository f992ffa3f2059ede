//! Seeded generators of test instances: regular sequences, scaled Koszul
//! data, pullback squares and submodule triples. The same seed always
//! yields the same instances.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::groebner::FreeVector;
use crate::modmath::{mult_injective, quotient_module, SubquotientModule};
use crate::multitor::{is_regular_sequence, koszul_cycles_and_boundaries};
use crate::ring::{Monomial, Poly, PolyRing};

const NAMES: [&str; 5] = ["x", "y", "z", "w", "v"];

/// A sequence `f`, a scalar `x` and a degree `q` over a shared ring.
#[derive(Clone, Debug)]
pub struct ScaledInstance {
    pub ring: Arc<PolyRing>,
    pub f: Vec<Poly>,
    pub x: Poly,
    pub q: usize,
}

/// Submodules `P, Q ⊆ N` of a free module.
#[derive(Clone, Debug)]
pub struct SquareInstance {
    pub n: SubquotientModule,
    pub p: SubquotientModule,
    pub q: SubquotientModule,
}

fn ring_with(nvars: usize) -> Arc<PolyRing> {
    PolyRing::rational(&NAMES[..nvars])
}

fn power(ring: &Arc<PolyRing>, var: usize, e: u32) -> Poly {
    Poly::monomial(ring, Monomial::var(ring.nvars(), var, e), ring.field().from_i64(1))
}

fn linear_form(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, vars: &[usize]) -> Poly {
    loop {
        let terms = vars
            .iter()
            .map(|&v| (Monomial::var(ring.nvars(), v, 1), ring.field().from_i64(rng.gen_range(-3..=3))));
        let l = Poly::from_terms(ring, terms).expect("valid terms");
        if !l.is_zero() {
            return l;
        }
    }
}

fn monomial_product(rng: &mut ChaCha8Rng, ring: &Arc<PolyRing>, vars: &[usize], degree: usize) -> Poly {
    (0..degree).fold(Poly::one(ring), |acc, _| &acc * &power(ring, *vars.choose(rng).unwrap(), 1))
}

/// Regular sequences of length at most 4 in at most 5 variables: powers of
/// distinct coordinates, independent linear forms, and powers of those.
pub fn regular_sequences(seed: u64, count: usize) -> Vec<(Arc<PolyRing>, Vec<Poly>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let nvars = rng.gen_range(2..=5);
        let ring = ring_with(nvars);
        let n = rng.gen_range(1..=nvars.min(4));
        let all: Vec<usize> = (0..nvars).collect();
        let f: Vec<Poly> = match out.len() % 3 {
            0 => {
                let mut vars = all.clone();
                vars.shuffle(&mut rng);
                vars[..n].iter().map(|&v| power(&ring, v, rng.gen_range(1..=3))).collect()
            }
            1 => (0..n).map(|_| linear_form(&mut rng, &ring, &all)).collect(),
            _ => (0..n).map(|_| linear_form(&mut rng, &ring, &all).pow(rng.gen_range(1..=2))).collect(),
        };
        if is_regular_sequence(&ring, &f).is_regular() {
            out.push((ring, f));
        }
    }
    out
}

/// Pairs `(f, x)` over `Q[x,y,z,w]` with `x ≠ 0`, mixing regular and
/// non-regular `f` (monomial products, repeated generators, linear forms).
/// `q` is drawn from `0..=n`.
pub fn scaled_instances(seed: u64, count: usize) -> Vec<ScaledInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = ring_with(4);
    let scalars = ["x", "x + y", "x^2", "x - 2*z", "y", "x*w + 1"];
    (0..count)
        .map(|k| {
            let n = rng.gen_range(1..=3);
            let mut f: Vec<Poly> = (0..n)
                .map(|_| match rng.gen_range(0..3) {
                    0 => linear_form(&mut rng, &ring, &[1, 2, 3]),
                    _ => {
                        let degree = rng.gen_range(1..=2);
                        monomial_product(&mut rng, &ring, &[1, 2, 3], degree)
                    }
                })
                .collect();
            if n >= 2 && k % 4 == 0 {
                f[n - 1] = f[0].clone();
            }
            let x = crate::ring::parse_poly(scalars[rng.gen_range(0..scalars.len())], &ring).expect("fixed scalars parse");
            let q = rng.gen_range(0..=n);
            ScaledInstance { ring: ring.clone(), f, x, q }
        })
        .collect()
}

/// Instances of [`scaled_instances`] shape where `x` is injective on the
/// Koszul homology in degree `-q`.
pub fn pullback_instances(seed: u64, count: usize) -> Vec<ScaledInstance> {
    let mut out = Vec::with_capacity(count);
    let mut round = 0u64;
    while out.len() < count {
        for inst in scaled_instances(seed.wrapping_add(round), 2 * count) {
            if out.len() == count {
                break;
            }
            let (ker, im) = koszul_cycles_and_boundaries(&inst.ring, &inst.f, inst.q).expect("q within range");
            let h = quotient_module(&ker, &im).expect("boundaries are cycles");
            if mult_injective(&h, &inst.x).expect("same ring") {
                out.push(inst);
            }
        }
        round += 1;
    }
    out
}

/// `N ⊆ Q[x,y,z]^2` on two generators with linear entries, and `P`, `Q`
/// each generated by one linear combination of those generators.
pub fn square_instances(seed: u64, count: usize) -> Vec<SquareInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = ring_with(3);
    let all = [0, 1, 2];
    let entry = |rng: &mut ChaCha8Rng| {
        let l = linear_form(rng, &ring, &all);
        &l + &Poly::from_i64(&ring, rng.gen_range(-1..=1))
    };
    (0..count)
        .map(|_| {
            let gens: Vec<FreeVector> =
                (0..2).map(|_| FreeVector::new(&ring, vec![entry(&mut rng), entry(&mut rng)])).collect();
            let combo = |rng: &mut ChaCha8Rng| {
                let c = vec![entry(rng), entry(rng)];
                SubquotientModule::submodule(&ring, 2, vec![FreeVector::combination(&ring, 2, &c, &gens)])
                    .expect("rank two")
            };
            let p = combo(&mut rng);
            let q = combo(&mut rng);
            let n = SubquotientModule::submodule(&ring, 2, gens).expect("rank two");
            SquareInstance { n, p, q }
        })
        .collect()
}

/// Sequences over `Q[x,y,z,w]` of length 2 to 4 with a split point
/// `1 <= split < len`.
pub fn tensor_splits(seed: u64, count: usize) -> Vec<(Arc<PolyRing>, Vec<Poly>, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = ring_with(4);
    let all = [0, 1, 2, 3];
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            let f = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        linear_form(&mut rng, &ring, &all)
                    } else {
                        let degree = rng.gen_range(1..=2);
                        monomial_product(&mut rng, &ring, &all, degree)
                    }
                })
                .collect();
            let split = rng.gen_range(1..n);
            (ring.clone(), f, split)
        })
        .collect()
}
