use super::*;
use crate::ring::parse_poly;
use proptest::prelude::*;

fn ring4() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y", "z", "w"])
}

fn polys(ring: &Arc<PolyRing>, src: &[&str]) -> Vec<Poly> {
    src.iter().map(|s| parse_poly(s, ring).unwrap()).collect()
}

fn vecs(ring: &Arc<PolyRing>, src: &[&[&str]]) -> Vec<FreeVector> {
    src.iter().map(|v| FreeVector::new(ring, polys(ring, v))).collect()
}

#[test]
fn pure_variables_are_already_a_basis() {
    let r = PolyRing::rational(&["x", "y"]);
    let gb = ideal_basis(&r, &polys(&r, &["x", "y"]));
    assert_eq!(gb, polys(&r, &["x", "y"]));
}

#[test]
fn one_s_polynomial_step() {
    // x^2 + y^2 - x (x - y) = xy + y^2, then - y (x - y) leaves 2 y^2.
    let r = PolyRing::rational(&["x", "y"]);
    let gb = ideal_groebner(&r, &polys(&r, &["x^2 + y^2", "x - y"]));
    let basis: Vec<Poly> = gb.basis().iter().map(|v| v.entry(0).clone()).collect();
    // stored in descending order of leading term, and y^2 > x in grevlex
    assert_eq!(basis, polys(&r, &["y^2", "x - y"]));
    assert!(gb.contains(&FreeVector::new(&r, polys(&r, &["x^2 - y^2"]))).unwrap());
    assert!(gb.verify_criterion());
    assert!(gb.verify_reduced());
}

fn criterion_holds(ring: &Arc<PolyRing>, src: &[&[&str]]) -> bool {
    let basis: Vec<MVec> = vecs(ring, src).iter().map(MVec::from_free).collect();
    buchberger::satisfies_buchberger_criterion(&basis, ring.field(), ring.order())
}

#[test]
fn criterion_rejects_non_bases() {
    let r = PolyRing::rational(&["x", "y", "z"]);
    assert!(!criterion_holds(&r, &[&["x^2 - y"], &["x*y - 1"]]));
    // (x^2, y^2) is skipped through x*y, so (x^2, x*y + z^2) must catch it
    assert!(!criterion_holds(&r, &[&["x^2"], &["y^2"], &["x*y + z^2"]]));
    assert!(criterion_holds(&r, &[&["x^2"], &["y^2"], &["x*y"]]));
    assert!(!criterion_holds(&r, &[&["x", "y"], &["y", "x"]]));
    assert!(criterion_holds(&r, &[&["x", "0"], &["0", "y"]]));
}

#[test]
fn rational_and_modular_bases_have_equal_size() {
    let r = PolyRing::rational(&["x", "y", "z"]);
    let gens = vecs(&r, &[&["x^2*y + 2*z - 1", "y*z - 3*x"], &["3*x*y^2 - z", "x^2 - y*z"], &["y - 2*x*z", "x*y + 1"]]);
    let gb = module_groebner(&r, 2, &gens).unwrap();
    assert!(gb.verify_criterion());
    assert!(gb.contains_all(&gens).unwrap());
    let fp = PolyRing::new(["x", "y", "z"], crate::ring::FieldSpec::prime(32003).unwrap(), r.order()).unwrap();
    let gens_p: Vec<FreeVector> = gens.iter().map(|v| FreeVector::new(&fp, v.entries().iter().map(|p| parse_poly(&p.to_string(), &fp).unwrap()).collect())).collect();
    let gb_p = module_groebner(&fp, 2, &gens_p).unwrap();
    assert_eq!(gb.basis().len(), gb_p.basis().len());
}

#[test]
fn empty_generators_give_zero_module() {
    let r = ring4();
    let gb = module_groebner(&r, 3, &[]).unwrap();
    assert!(gb.is_zero());
    assert_eq!(gb.quotient_dim(), Length::Infinite);
}

#[test]
fn rank_mismatch_is_reported() {
    let r = ring4();
    let gens = vecs(&r, &[&["x", "y"], &["z"]]);
    assert!(matches!(
        module_groebner(&r, 2, &gens),
        Err(GroebnerError::RankMismatch { expected: 2, found: 1 })
    ));
}

#[test]
fn normal_form_examples() {
    let r = PolyRing::rational(&["x", "y"]);
    let gb = ideal_groebner(&r, &polys(&r, &["x - y"]));
    let nf = normal_form(&FreeVector::new(&r, polys(&r, &["x^2"])), &gb).unwrap();
    assert_eq!(nf.entry(0), &parse_poly("y^2", &r).unwrap());

    let gens = polys(&r, &["x^3 - y", "x*y^2 + 1"]);
    let gb = ideal_groebner(&r, &gens);
    for g in &gens {
        assert!(gb.normal_form(&FreeVector::new(&r, vec![g.clone()])).unwrap().is_zero());
    }

    let gb = ideal_groebner(&r, &polys(&r, &["x", "y"]));
    let one = FreeVector::new(&r, polys(&r, &["1"]));
    assert_eq!(gb.normal_form(&one).unwrap(), one);
}

#[test]
fn lifts_re_expand_exactly() {
    let r = ring4();
    let gens = vecs(&r, &[&["x - z"], &["y - w"]]);
    let v = FreeVector::new(&r, polys(&r, &["z*w*x - z^2*w"]));
    let coords = membership_with_lift(&v, &gens).unwrap().unwrap();
    assert_eq!(FreeVector::combination(&r, 1, &coords, &gens), v);

    let gens = vecs(&r, &[&["x", "y"], &["z", "w"]]);
    let v = gens[0].scale(&parse_poly("x", &r).unwrap());
    let coords = membership_with_lift(&v, &gens).unwrap().unwrap();
    assert_eq!(coords, polys(&r, &["x", "0"]));

    let gens = vecs(&r, &[&["x"], &["y"]]);
    let one = FreeVector::new(&r, polys(&r, &["1"]));
    assert_eq!(membership_with_lift(&one, &gens).unwrap(), None);
}

fn same_span(ring: &Arc<PolyRing>, rank: usize, a: &[FreeVector], b: &[FreeVector]) -> bool {
    module_groebner(ring, rank, a).unwrap() == module_groebner(ring, rank, b).unwrap()
}

#[test]
fn koszul_syzygy_of_two_variables() {
    let r = PolyRing::rational(&["x", "y", "z"]);
    let m = FreeMatrix::from_rows(&r, 2, vec![polys(&r, &["y", "z"])]);
    let syz = syzygy(&m);
    assert!(m.compose(&syz).is_zero());
    assert!(same_span(&r, 2, syz.columns(), &vecs(&r, &[&["z", "-y"]])));
}

#[test]
fn syzygy_of_identity_is_zero() {
    let r = ring4();
    assert_eq!(syzygy(&FreeMatrix::identity(&r, 3)).ncols(), 0);
}

#[test]
fn syzygy_of_common_factor_row() {
    let r = ring4();
    let m = FreeMatrix::from_rows(&r, 2, vec![polys(&r, &["y*z", "y*w"])]);
    let syz = syzygy(&m);
    assert!(m.compose(&syz).is_zero());
    let expected = vecs(&r, &[&["w", "-z"]]);
    assert!(same_span(&r, 2, syz.columns(), &expected));
    // the Koszul syzygy (yw, -yz) is a strict multiple
    let koszul = vecs(&r, &[&["y*w", "-y*z"]]);
    assert!(!same_span(&r, 2, &koszul, &expected));
}

#[test]
fn quotient_by_nonzerodivisor_and_by_power() {
    let r = PolyRing::rational(&["x", "y"]);
    let q = ideal_quotient(&polys(&r, &["y"]), &parse_poly("x", &r).unwrap()).unwrap();
    assert_eq!(q, polys(&r, &["y"]));
    let q = ideal_quotient(&polys(&r, &["x^2"]), &parse_poly("x", &r).unwrap()).unwrap();
    assert_eq!(q, polys(&r, &["x"]));
    assert_eq!(
        ideal_quotient(&polys(&r, &["x"]), &Poly::zero(&r)),
        Err(GroebnerError::ZeroDivisorArgument)
    );
}

#[test]
fn two_planes_quotients() {
    let r = ring4();
    let planes = polys(&r, &["x*z", "x*w", "y*z", "y*w"]);
    // (x,y) ∩ (z,w) is radical and x - z avoids both primes, so the colon
    // ideal is I itself.
    let q = ideal_quotient(&planes, &parse_poly("x - z", &r).unwrap()).unwrap();
    assert!(ideals_equal(&r, &q, &planes));
    // After cutting by x - z, y - w is a zero divisor: x (y - w) lands in
    // the ideal while x does not.
    let mut cut = planes.clone();
    cut.push(parse_poly("x - z", &r).unwrap());
    let q = ideal_quotient(&cut, &parse_poly("y - w", &r).unwrap()).unwrap();
    let gb = ideal_groebner(&r, &q);
    assert!(gb.contains(&FreeVector::new(&r, polys(&r, &["x"]))).unwrap());
    assert!(!ideal_groebner(&r, &cut).contains(&FreeVector::new(&r, polys(&r, &["x"]))).unwrap());
}

#[test]
fn zero_dimensionality() {
    let r = PolyRing::rational(&["x", "y"]);
    assert!(is_zero_dimensional(&r, &polys(&r, &["x", "y"])));
    assert!(!is_zero_dimensional(&r, &polys(&r, &["x"])));
    assert!(!is_zero_dimensional(&r, &[]));
    let r0 = PolyRing::rational(&[]);
    assert!(is_zero_dimensional(&r0, &[]));

    let r = ring4();
    let serre = polys(&r, &["x*z", "x*w", "y*z", "y*w", "x - z", "y - w"]);
    assert!(is_zero_dimensional(&r, &serre));
}

#[test]
fn quotient_dimensions() {
    let r = PolyRing::rational(&["x", "y"]);
    assert_eq!(quotient_dim(&r, &polys(&r, &["x^2", "y"])), Ok(2));
    assert_eq!(quotient_dim(&r, &polys(&r, &["x", "y"])), Ok(1));
    assert_eq!(quotient_dim(&r, &polys(&r, &["x"])), Err(GroebnerError::NotFiniteDimensional));
    assert_eq!(quotient_dim(&r, &polys(&r, &["x + 1", "y"])), Ok(1));
    assert_eq!(quotient_dim(&r, &polys(&r, &["1"])), Ok(0));

    let r = ring4();
    let serre = polys(&r, &["x*z", "x*w", "y*z", "y*w", "x - z", "y - w"]);
    assert_eq!(quotient_dim(&r, &serre), Ok(3));
}

#[test]
fn module_quotient_dimension_sums_components() {
    let r = PolyRing::rational(&["x", "y"]);
    // R^2 / ((x,0),(y,0),(0,x^2),(0,y)) has dimension 1 + 2
    let gens = vecs(&r, &[&["x", "0"], &["y", "0"], &["0", "x^2"], &["0", "y"]]);
    assert_eq!(module_groebner(&r, 2, &gens).unwrap().quotient_dim(), Length::Finite(3));
    // a component with no leading term is infinite
    let gens = vecs(&r, &[&["x", "0"], &["y", "0"]]);
    assert_eq!(module_groebner(&r, 2, &gens).unwrap().quotient_dim(), Length::Infinite);
}

#[test]
fn prime_field_basis() {
    use crate::ring::{FieldSpec, MonomialOrder};
    let r = PolyRing::new(["x", "y"], FieldSpec::prime(2).unwrap(), MonomialOrder::GrevLex).unwrap();
    // over F_2, (x + y)^2 = x^2 + y^2
    let gb = ideal_groebner(&r, &polys(&r, &["x + y", "x^2 + y^2 + 1"]));
    assert!(gb.contains(&FreeVector::new(&r, polys(&r, &["1"]))).unwrap());
}

#[test]
fn lex_order_basis() {
    use crate::ring::{FieldSpec, MonomialOrder};
    let r = PolyRing::new(["x", "y"], FieldSpec::Rationals, MonomialOrder::Lex).unwrap();
    let gb = ideal_groebner(&r, &polys(&r, &["x^2 - y", "x*y - 1"]));
    assert!(gb.verify_criterion());
    let basis: Vec<Poly> = gb.basis().iter().map(|v| v.entry(0).clone()).collect();
    assert_eq!(basis, polys(&r, &["x - y^2", "y^3 - 1"]));
}

// ---- randomized invariants ----

fn ring3() -> Arc<PolyRing> {
    PolyRing::rational(&["x", "y", "z"])
}

fn arb_poly3() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((-3i64..=3, 0u32..3, 0u32..3, 0u32..2), 1..4).prop_map(|terms| {
        let r = ring3();
        Poly::from_terms(
            &r,
            terms
                .into_iter()
                .map(|(c, a, b, d)| (Monomial::new(vec![a, b, d]), r.field().from_i64(c))),
        )
        .unwrap()
    })
}

fn arb_vector(rank: usize) -> impl Strategy<Value = FreeVector> {
    proptest::collection::vec(arb_poly3(), rank).prop_map(|ps| FreeVector::new(&ring3(), ps))
}

fn det2(a: &FreeVector, b: &FreeVector) -> Poly {
    &(a.entry(0) * b.entry(1)) - &(a.entry(1) * b.entry(0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn computed_bases_satisfy_criterion(gens in proptest::collection::vec(arb_vector(2), 1..4)) {
        let gb = module_groebner(&ring3(), 2, &gens).unwrap();
        prop_assert!(gb.verify_criterion());
        prop_assert!(gb.verify_reduced());
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
        let again = module_groebner(&ring3(), 2, gb.basis()).unwrap();
        prop_assert_eq!(again, gb);
    }

    #[test]
    fn normal_form_agrees_with_lifting(
        gens in proptest::collection::vec(arb_vector(2), 1..3),
        coeffs in proptest::collection::vec(arb_poly3(), 3),
        outside in arb_vector(2),
    ) {
        let r = ring3();
        let gb = module_groebner(&r, 2, &gens).unwrap();
        let inside = FreeVector::combination(&r, 2, &coeffs[..gens.len()], &gens);
        for v in [inside, outside] {
            let nf_zero = gb.normal_form(&v).unwrap().is_zero();
            let lift = membership_with_lift(&v, &gens).unwrap();
            prop_assert_eq!(nf_zero, lift.is_some());
            if let Some(c) = lift {
                prop_assert_eq!(FreeVector::combination(&r, 2, &c, &gens), v);
            }
        }
    }

    #[test]
    fn syzygies_are_exact_kernels(cols in proptest::collection::vec(arb_vector(2), 3)) {
        let r = ring3();
        let m = FreeMatrix::from_columns(&r, 2, cols.clone());
        let syz = syzygy(&m);
        prop_assert!(m.compose(&syz).is_zero());
        // Cramer: the signed 2x2 minors form a kernel element
        let minors = FreeVector::new(&r, vec![
            det2(&cols[1], &cols[2]),
            -det2(&cols[0], &cols[2]),
            det2(&cols[0], &cols[1]),
        ]);
        prop_assert!(m.apply(&minors).is_zero());
        prop_assert!(module_groebner(&r, 3, syz.columns()).unwrap().contains(&minors).unwrap());
    }

    #[test]
    fn quotient_dim_ignores_generating_set(extra in proptest::collection::vec(arb_poly3(), 2)) {
        let r = ring3();
        let base = polys(&r, &["x^2 + y", "y^2 - z", "z^3 - x*y"]);
        let mut regen = base.clone();
        for (i, e) in extra.iter().enumerate() {
            regen.push(e * &base[i]);
        }
        let reshaped = vec![
            &base[0] + &base[1],
            base[1].clone(),
            &base[2] - &(&extra[0] * &base[0]),
        ];
        let d = quotient_dim(&r, &base).unwrap();
        prop_assert_eq!(quotient_dim(&r, &regen).unwrap(), d);
        prop_assert_eq!(quotient_dim(&r, &reshaped).unwrap(), d);
    }

    #[test]
    fn colon_cancels_nonzerodivisor(f in arb_poly3(), gs in proptest::collection::vec(arb_poly3(), 1..3)) {
        let r = ring3();
        prop_assume!(!f.is_zero());
        let scaled: Vec<Poly> = gs.iter().map(|g| &f * g).collect();
        let q = ideal_quotient(&scaled, &f).unwrap();
        prop_assert!(ideals_equal(&r, &q, &gs));
    }
}
