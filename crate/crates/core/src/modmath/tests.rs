use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::ring::{parse_poly, Monomial, PolyRing};

fn ring3() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y", "z"])
}

fn ring4() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y", "z", "w"])
}

fn p(r: &Arc<PolyRing>, s: &str) -> Poly {
    parse_poly(s, r).unwrap()
}

fn v(r: &Arc<PolyRing>, entries: &[&str]) -> FreeVector {
    FreeVector::new(r, entries.iter().map(|s| p(r, s)).collect())
}

fn row(r: &Arc<PolyRing>, entries: &[&str]) -> FreeMatrix {
    FreeMatrix::from_rows(r, entries.len(), vec![entries.iter().map(|s| p(r, s)).collect()])
}

fn sub(r: &Arc<PolyRing>, rank: usize, gens: &[&[&str]]) -> SubquotientModule {
    SubquotientModule::submodule(r, rank, gens.iter().map(|g| v(r, g)).collect()).unwrap()
}

fn ideal(r: &Arc<PolyRing>, gens: &[&str]) -> SubquotientModule {
    SubquotientModule::submodule(r, 1, gens.iter().map(|g| v(r, &[g])).collect()).unwrap()
}

fn cyclic(r: &Arc<PolyRing>, rels: &[&str]) -> SubquotientModule {
    SubquotientModule::cokernel(r, 1, rels.iter().map(|g| v(r, &[g])).collect()).unwrap()
}

#[test]
fn kernel_of_a_row() {
    let r = ring3();
    let k = kernel_module(&row(&r, &["y", "z"]));
    assert!(submodule_equal(&k, &sub(&r, 2, &[&["z", "-y"]])).unwrap());
    assert!(kernel_module(&FreeMatrix::identity(&r, 2)).is_zero());
    let k = kernel_module(&FreeMatrix::zero(&r, 1, 2));
    assert!(submodule_equal(&k, &SubquotientModule::free(&r, 2)).unwrap());
}

#[test]
fn images() {
    let r = ring3();
    assert!(image_module(&FreeMatrix::zero(&r, 2, 3)).is_zero());
    let col = FreeMatrix::from_columns(&r, 2, vec![v(&r, &["y", "z"])]);
    assert!(submodule_equal(&image_module(&col), &sub(&r, 2, &[&["y", "z"]])).unwrap());
    // Koszul complex of (y, z): image of the second differential is the
    // kernel of the first
    let d1 = row(&r, &["-y", "-z"]);
    let d2 = FreeMatrix::from_columns(&r, 2, vec![v(&r, &["z", "-y"])]);
    assert!(d1.compose(&d2).is_zero());
    assert!(submodule_equal(&image_module(&d2), &kernel_module(&d1)).unwrap());
}

#[test]
fn scaling() {
    let r = ring3();
    let m = sub(&r, 2, &[&["z", "-y"]]);
    let xm = scale_submodule(&m, &p(&r, "x")).unwrap();
    assert_eq!(xm.gens(), &[v(&r, &["x*z", "-x*y"])]);
    assert!(submodule_equal(&scale_submodule(&m, &Poly::one(&r)).unwrap(), &m).unwrap());
    assert!(scale_submodule(&m, &Poly::zero(&r)).unwrap().is_zero());
    assert_eq!(scale_submodule(&cyclic(&r, &["x"]), &p(&r, "x")).unwrap_err(), ModuleError::HasRelations);
}

#[test]
fn equality() {
    let r = ring3();
    assert!(submodule_equal(&ideal(&r, &["x", "y"]), &ideal(&r, &["y", "x + y"])).unwrap());
    assert!(!submodule_equal(&ideal(&r, &["x"]), &ideal(&r, &["x^2"])).unwrap());
    assert!(matches!(
        submodule_equal(&ideal(&r, &["x"]), &sub(&r, 2, &[&["x", "0"]])),
        Err(ModuleError::AmbientMismatch { left: 1, right: 2 })
    ));
    // multiplying a differential by a nonzerodivisor keeps its kernel
    let d = row(&r, &["-y", "-z"]);
    assert!(submodule_equal(&kernel_module(&d.scale(&p(&r, "x"))), &kernel_module(&d)).unwrap());
}

#[test]
fn intersections() {
    let r = ring3();
    let i = submodule_intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
    assert!(submodule_equal(&i, &ideal(&r, &["x*y"])).unwrap());
    let a = ideal(&r, &["x^2", "y*z"]);
    assert!(submodule_equal(&submodule_intersect(&a, &a).unwrap(), &a).unwrap());

    let r = ring4();
    let big = sub(&r, 2, &[&["w", "-z"]]);
    let small = sub(&r, 2, &[&["y*w", "-y*z"]]);
    assert!(submodule_equal(&submodule_intersect(&big, &small).unwrap(), &small).unwrap());
}

#[test]
fn sums() {
    let r = ring3();
    let a = ideal(&r, &["x"]);
    let zero = SubquotientModule::zero(&r, 1);
    assert!(submodule_equal(&submodule_sum(&a, &zero).unwrap(), &a).unwrap());
    assert!(submodule_equal(&submodule_sum(&a, &a).unwrap(), &a).unwrap());
    assert!(submodule_equal(&submodule_sum(&a, &ideal(&r, &["y"])).unwrap(), &ideal(&r, &["x", "y"])).unwrap());
}

#[test]
fn quotients() {
    let r = ring3();
    let q = quotient_module(&SubquotientModule::free(&r, 1), &ideal(&r, &["x"])).unwrap();
    assert_eq!(q.gens(), &[v(&r, &["1"])]);
    assert_eq!(q.rels(), &[v(&r, &["x"])]);

    let n = ideal(&r, &["x", "y"]);
    assert_eq!(module_length(&quotient_module(&n, &n).unwrap()).unwrap(), Length::Finite(0));
    assert_eq!(quotient_module(&ideal(&r, &["x"]), &n).unwrap_err(), ModuleError::NotContained);

    // ker / x im for the Koszul complex of (y, z)
    let d1 = row(&r, &["-y", "-z"]);
    let d2 = FreeMatrix::from_columns(&r, 2, vec![v(&r, &["z", "-y"])]);
    let ker = kernel_module(&d1);
    let xim = scale_submodule(&image_module(&d2), &p(&r, "x")).unwrap();
    let m = quotient_module(&ker, &xim).unwrap();
    let pres = presentation(&m).unwrap();
    assert_eq!((pres.nrows(), pres.ncols()), (1, 1));
    assert!(submodule_equal(&image_module(&pres), &ideal(&r, &["x"])).unwrap());
}

#[test]
fn presentations() {
    let r = ring3();
    let m = cyclic(&r, &["x"]);
    assert_eq!(presentation(&m).unwrap(), row(&r, &["x"]));

    let m = SubquotientModule::new(&r, 2, vec![v(&r, &["z", "-y"])], vec![v(&r, &["x*z", "-x*y"])]).unwrap();
    assert_eq!(presentation(&m).unwrap(), row(&r, &["x"]));

    let pres = presentation(&SubquotientModule::free(&r, 2)).unwrap();
    assert_eq!((pres.nrows(), pres.ncols()), (2, 0));

    // two generators with a syzygy between them
    let m = ideal(&r, &["y", "z"]);
    let pres = presentation(&m).unwrap();
    assert_eq!(pres.nrows(), 2);
    let expected = FreeMatrix::from_columns(&r, 2, vec![v(&r, &["z", "-y"])]);
    assert!(submodule_equal(&image_module(&pres), &image_module(&expected)).unwrap());

    let bad = SubquotientModule::new(&r, 1, vec![v(&r, &["x"])], vec![v(&r, &["y"])]).unwrap();
    assert!(!bad.is_well_formed());
    assert_eq!(presentation(&bad).unwrap_err(), ModuleError::IllFormed { relation: 0 });
}

#[test]
fn lengths() {
    let r = PolyRing::rational(&["x", "y"]);
    assert_eq!(module_length(&cyclic(&r, &["x", "y"])).unwrap(), Length::Finite(1));
    assert_eq!(module_length(&cyclic(&r, &["x^2", "x*y", "y^3"])).unwrap(), Length::Finite(4));
    assert_eq!(module_length(&cyclic(&r, &["x"])).unwrap(), Length::Infinite);
    // R/(x, y - 1) is one-dimensional but sits at (0, 1)
    let off = cyclic(&r, &["x", "y - 1"]);
    assert_eq!(module_length(&off).unwrap_err(), ModuleError::LengthNotLocal);
    assert_eq!(off.vector_space_dim().unwrap(), Length::Finite(1));
    // the intersection of two planes in 4-space
    let r = ring4();
    let tor0 = cyclic(&r, &["x*z", "x*w", "y*z", "y*w", "x - z", "y - w"]);
    assert_eq!(module_length(&tor0).unwrap(), Length::Finite(3));
}

#[test]
fn generic_ranks() {
    let r = ring3();
    assert_eq!(SubquotientModule::free(&r, 3).generic_rank(), 3);
    assert_eq!(cyclic(&r, &["x"]).generic_rank(), 0);
    assert_eq!(kernel_module(&row(&r, &["x", "y", "z"])).generic_rank(), 2);
}

#[test]
fn multiplication_maps() {
    let r = ring3();
    let m = cyclic(&r, &["y"]);
    assert!(mult_injective(&m, &p(&r, "x")).unwrap());
    assert!(!mult_injective(&m, &p(&r, "y")).unwrap());
    assert_eq!(mult_kernel_witness(&cyclic(&r, &["x*y"]), &p(&r, "x")).unwrap(), Some(v(&r, &["y"])));

    // first Koszul homology of (yz, yw) is R/(y) on (w, -z)
    let r = ring4();
    let d1 = row(&r, &["-y*z", "-y*w"]);
    let d2 = FreeMatrix::from_columns(&r, 2, vec![v(&r, &["y*w", "-y*z"])]);
    let h = quotient_module(&kernel_module(&d1), &image_module(&d2)).unwrap();
    assert!(submodule_equal(&kernel_module(&d1), &sub(&r, 2, &[&["w", "-z"]])).unwrap());
    assert!(mult_injective(&h, &p(&r, "x")).unwrap());
    assert!(!mult_injective(&h, &p(&r, "y")).unwrap());
}

#[test]
fn bijectivity() {
    let r = ring3();
    let m = cyclic(&r, &["x", "y^2"]);
    assert_eq!(map_is_bijective(&ModuleMap::identity(&m)).unwrap(), Bijectivity::Bijective);

    let rx = cyclic(&r, &["x"]);
    let times_x = ModuleMap::new(rx.clone(), rx.clone(), row(&r, &["x"])).unwrap();
    assert_eq!(map_is_bijective(&times_x).unwrap(), Bijectivity::NotInjective(v(&r, &["1"])));

    // R/(x) -> R/(x, y) is onto but not injective; (x, y) -> R is the reverse
    let proj = ModuleMap::canonical(&rx, &cyclic(&r, &["x", "y"])).unwrap();
    assert_eq!(map_is_bijective(&proj).unwrap(), Bijectivity::NotInjective(v(&r, &["y"])));
    let incl = ModuleMap::canonical(&ideal(&r, &["x", "y"]), &SubquotientModule::free(&r, 1)).unwrap();
    assert_eq!(map_is_bijective(&incl).unwrap(), Bijectivity::NotSurjective(v(&r, &["1"])));

    // 1 -> 1 from R/(x) to R is not well defined
    let err = ModuleMap::new(rx.clone(), SubquotientModule::free(&r, 1), row(&r, &["1"])).unwrap_err();
    assert!(matches!(err, ModuleError::IllFormedMap(_)));
}

#[test]
fn composition_and_equality() {
    let r = ring3();
    let m = cyclic(&r, &["x^2"]);
    let x = ModuleMap::new(m.clone(), m.clone(), row(&r, &["x"])).unwrap();
    let xx = x.then(&x).unwrap();
    assert!(xx.equals(&ModuleMap::zero(&m, &m)).unwrap());
    assert!(!x.equals(&ModuleMap::zero(&m, &m)).unwrap());
    assert!(ModuleMap::identity(&m).then(&x).unwrap().equals(&x).unwrap());
}

#[test]
fn pullback_of_identities_is_the_diagonal() {
    let r = ring3();
    let m = cyclic(&r, &["x", "y^2"]);
    let id = ModuleMap::identity(&m);
    let pb = pullback(&id, &id).unwrap();
    assert!(map_is_bijective(&pb.p1).unwrap().is_bijective());
    assert!(map_is_bijective(&pb.p2).unwrap().is_bijective());
    assert!(pb.p1.then(&id).unwrap().equals(&pb.p2.then(&id).unwrap()).unwrap());
}

#[test]
fn pullback_over_zero_is_the_direct_sum() {
    let r = ring3();
    let m = cyclic(&r, &["x"]);
    let n = sub(&r, 2, &[&["y", "z"]]);
    let zero = SubquotientModule::zero(&r, 0);
    let pb = pullback(&ModuleMap::zero(&m, &zero), &ModuleMap::zero(&n, &zero)).unwrap();
    assert!(pb.module.same_spans(&m.direct_sum(&n).unwrap()).unwrap());
}

#[test]
fn pullback_needs_a_common_target() {
    let r = ring3();
    let a = cyclic(&r, &["x"]);
    let b = cyclic(&r, &["y"]);
    let err = pullback(&ModuleMap::identity(&a), &ModuleMap::identity(&b)).unwrap_err();
    assert_eq!(err, ModuleError::TargetMismatch);
}

#[test]
fn pullback_along_an_isomorphism() {
    // the projection to the other factor must be an isomorphism
    let r = ring3();
    let c = cyclic(&r, &["x", "y"]);
    let b = cyclic(&r, &["x^2", "y"]);
    let g = ModuleMap::canonical(&b, &c).unwrap();
    let pb = pullback(&ModuleMap::identity(&c), &g).unwrap();
    assert!(map_is_bijective(&pb.p2).unwrap().is_bijective());
    assert!(!map_is_bijective(&pb.p1).unwrap().is_bijective());
}

fn arb_linear() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((-2i64..=2, 0usize..4), 1..3).prop_map(|terms| {
        let r = ring3();
        let terms = terms.into_iter().map(|(c, i)| {
            let mono = if i == 3 { Monomial::one(3) } else { Monomial::var(3, i, 1) };
            (mono, r.field().from_i64(c))
        });
        Poly::from_terms(&r, terms).unwrap()
    })
}

fn arb_coeffs(k: usize) -> impl Strategy<Value = Vec<Poly>> {
    proptest::collection::vec(arb_linear(), k)
}

fn arb_local_ideal() -> impl Strategy<Value = Vec<Poly>> {
    (1u32..3, 1u32..3, 1u32..3, arb_linear()).prop_map(|(a, b, c, g)| {
        let r = ring3();
        let x = |i, e| Poly::monomial(&r, Monomial::var(3, i, e), num_traits::One::one());
        vec![x(0, a), x(1, b), x(2, c), &g * &x(0, 1)]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // For submodules P, Q of N, the square N/(P∩Q) -> N/P, N/Q -> N/(P+Q)
    // is cartesian.
    #[test]
    fn cartesian_square_of_projections(
        nc in arb_coeffs(4),
        pc in arb_coeffs(2),
        qc in arb_coeffs(2),
    ) {
        let r = ring3();
        let n_gens = vec![
            FreeVector::new(&r, vec![nc[0].clone(), nc[1].clone()]),
            FreeVector::new(&r, vec![nc[2].clone(), nc[3].clone()]),
        ];
        let n = SubquotientModule::submodule(&r, 2, n_gens.clone()).unwrap();
        let p_sub = SubquotientModule::submodule(&r, 2, vec![FreeVector::combination(&r, 2, &pc, &n_gens)]).unwrap();
        let q_sub = SubquotientModule::submodule(&r, 2, vec![FreeVector::combination(&r, 2, &qc, &n_gens)]).unwrap();

        let m_p = quotient_module(&n, &p_sub).unwrap();
        let m_q = quotient_module(&n, &q_sub).unwrap();
        let m_pq = quotient_module(&n, &submodule_sum(&p_sub, &q_sub).unwrap()).unwrap();
        let m_cap = quotient_module(&n, &submodule_intersect(&p_sub, &q_sub).unwrap()).unwrap();

        let f = ModuleMap::canonical(&m_p, &m_pq).unwrap();
        let g = ModuleMap::canonical(&m_q, &m_pq).unwrap();
        let pb = pullback(&f, &g).unwrap();
        prop_assert!(pb.p1.then(&f).unwrap().equals(&pb.p2.then(&g).unwrap()).unwrap());
        let h1 = ModuleMap::canonical(&m_cap, &m_p).unwrap();
        let h2 = ModuleMap::canonical(&m_cap, &m_q).unwrap();
        let phi = pb.induced_map(&h1, &h2).unwrap();
        prop_assert_eq!(map_is_bijective(&phi).unwrap(), Bijectivity::Bijective);
    }

    #[test]
    fn length_is_additive_on_nested_quotients(ideal in arb_local_ideal()) {
        let r = ring3();
        let to_vecs = |ps: &[Poly]| ps.iter().map(|q| FreeVector::new(&r, vec![q.clone()])).collect::<Vec<_>>();
        let w = SubquotientModule::submodule(&r, 1, to_vecs(&ideal)).unwrap();
        let shrunk: Vec<Poly> = ideal
            .iter()
            .flat_map(|g| (0..3).map(move |i| g * &Poly::var(g.ring(), i)))
            .collect();
        let w2 = SubquotientModule::submodule(&r, 1, to_vecs(&shrunk)).unwrap();
        let n = SubquotientModule::free(&r, 1);
        let big = module_length(&quotient_module(&n, &w2).unwrap()).unwrap().finite().unwrap();
        let top = module_length(&quotient_module(&n, &w).unwrap()).unwrap().finite().unwrap();
        let bottom = module_length(&quotient_module(&w, &w2).unwrap()).unwrap().finite().unwrap();
        prop_assert_eq!(big, top + bottom);
    }

    #[test]
    fn intersection_is_contained_in_both(ac in arb_coeffs(4), bc in arb_coeffs(2)) {
        let r = ring3();
        let a = SubquotientModule::submodule(&r, 2, vec![
            FreeVector::new(&r, vec![ac[0].clone(), ac[1].clone()]),
            FreeVector::new(&r, vec![ac[2].clone(), ac[3].clone()]),
        ]).unwrap();
        let b = SubquotientModule::submodule(&r, 2, vec![FreeVector::new(&r, bc.clone())]).unwrap();
        let i = submodule_intersect(&a, &b).unwrap();
        prop_assert!(a.gens_gb().contains_all(i.gens()).unwrap());
        prop_assert!(b.gens_gb().contains_all(i.gens()).unwrap());
        // nested case
        let ab = submodule_sum(&a, &b).unwrap();
        prop_assert!(submodule_equal(&submodule_intersect(&a, &ab).unwrap(), &a).unwrap());
    }

    #[test]
    fn quotient_by_zero_is_unchanged(ac in arb_coeffs(2)) {
        let r = ring3();
        let a = SubquotientModule::submodule(&r, 2, vec![FreeVector::new(&r, ac)]).unwrap();
        let q = quotient_module(&a, &SubquotientModule::zero(&r, 2)).unwrap();
        prop_assert!(q.same_spans(&a).unwrap());
    }
}
