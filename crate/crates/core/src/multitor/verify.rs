use std::sync::Arc;

use super::{
    is_regular_sequence, koszul_cycles_and_boundaries, multitor_hypersurfaces, scaled_cohomology_model, tor_pair,
    MultitorError, Regularity, VerifierReport,
};
use crate::complexes::{free_resolution, homology, koszul_complex};
use crate::groebner::{ideal_groebner, ideal_quotient, FreeVector};
use crate::modmath::{
    map_is_bijective, mult_kernel_witness, pullback, quotient_module, scale_submodule, submodule_intersect,
    submodule_sum, Bijectivity, ModuleMap, SubquotientModule,
};
use crate::ring::{Poly, PolyRing};

fn show_seq(f: &[Poly]) -> String {
    format!("({})", f.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

/// A generator of one span missing from the other, if the spans differ.
fn span_difference(a: &SubquotientModule, b: &SubquotientModule) -> Option<String> {
    let (ga, gb) = (a.gens_gb(), b.gens_gb());
    if ga == gb {
        return None;
    }
    let missing = |from: &SubquotientModule, into: &crate::groebner::ModuleGb| {
        from.gens().iter().find(|u| !into.contains(u).unwrap_or(false)).cloned()
    };
    let w = missing(a, &gb).or_else(|| missing(b, &ga));
    Some(w.map_or_else(|| "reduced bases differ".to_string(), |v| v.to_string()))
}

/// Compares `(U, V)` spans; the witness names the side that differs.
fn subquotient_difference(a: &SubquotientModule, b: &SubquotientModule) -> Option<String> {
    if a.ambient_rank() != b.ambient_rank() {
        return Some(format!("ambient ranks {} and {}", a.ambient_rank(), b.ambient_rank()));
    }
    let gens = |m: &SubquotientModule| SubquotientModule::submodule(m.ring(), m.ambient_rank(), m.gens().to_vec());
    let rels = |m: &SubquotientModule| SubquotientModule::submodule(m.ring(), m.ambient_rank(), m.rels().to_vec());
    let (ga, gb) = (gens(a).ok()?, gens(b).ok()?);
    if let Some(w) = span_difference(&ga, &gb) {
        return Some(format!("generators differ at {w}"));
    }
    let (ra, rb) = (rels(a).ok()?, rels(b).ok()?);
    span_difference(&ra, &rb).map(|w| format!("relations differ at {w}"))
}

fn scaled(f: &[Poly], x: &Poly) -> Vec<Poly> {
    f.iter().map(|fi| x * fi).collect()
}

/// Koszul cohomology of `(x f_1, ..., x f_n)` in degree `-q` against
/// `ker ∂_f^{-q} / x · im ∂_f^{-q-1}`, with the intermediate identities.
pub fn check_prop_affine(ring: &Arc<PolyRing>, f: &[Poly], x: &Poly, q: usize) -> Result<VerifierReport, MultitorError> {
    let n = f.len();
    if q > n {
        return Err(MultitorError::DegreeOutOfRange { q, max: n });
    }
    let mut r = VerifierReport::new("prop31", format!("f = {}, x = {x}, q = {q}", show_seq(f)));
    if !r.precondition("x_nonzero", !x.is_zero(), None) {
        return Ok(r);
    }
    let xf = scaled(f, x);
    let kf = koszul_complex(ring, f);
    let kxf = koszul_complex(ring, &xf);

    let mismatch = (1..=n).find(|&d| kxf.differential(d) != &kf.differential(d).scale(x));
    r.check("differential_is_scaled", mismatch.is_none(), mismatch.map(|d| format!("degree -{d}")));

    let (ker_f, im_f) = koszul_cycles_and_boundaries(ring, f, q)?;
    let (ker_xf, im_xf) = koszul_cycles_and_boundaries(ring, &xf, q)?;
    let w = span_difference(&ker_xf, &ker_f);
    r.check("kernels_equal", w.is_none(), w);
    let w = span_difference(&im_xf, &scale_submodule(&im_f, x)?);
    r.check("image_is_scaled", w.is_none(), w);

    let h = homology(&kxf, -(q as i64))?;
    let model = scaled_cohomology_model(ring, f, x, q)?;
    let w = subquotient_difference(&h, &model);
    r.check("homology_matches_model", w.is_none(), w);
    Ok(r)
}

/// For a regular sequence, the model is `ker ⊗ R/(x)`, certified by a
/// bijective canonical map.
pub fn check_cor_regular(ring: &Arc<PolyRing>, f: &[Poly], x: &Poly, q: usize) -> Result<VerifierReport, MultitorError> {
    let n = f.len();
    if q > n {
        return Err(MultitorError::DegreeOutOfRange { q, max: n });
    }
    let mut r = VerifierReport::new("cor32", format!("f = {}, x = {x}, q = {q}", show_seq(f)));
    let ok = r.precondition("x_nonzero", !x.is_zero(), None)
        & r.precondition("q_positive", q >= 1, None)
        & match is_regular_sequence(ring, f) {
            Regularity::Regular => r.precondition("sequence_regular", true, None),
            Regularity::NotRegular { index, witness } => {
                r.precondition("sequence_regular", false, Some(format!("f_{index} kills {witness}")))
            }
        };
    if !ok {
        return Ok(r);
    }
    let (ker, im) = koszul_cycles_and_boundaries(ring, f, q)?;
    let w = span_difference(&im, &ker);
    r.check("boundaries_equal_cycles", w.is_none(), w);

    let model = scaled_cohomology_model(ring, f, x, q)?;
    let target = quotient_module(&ker, &scale_submodule(&ker, x)?)?;
    match ModuleMap::canonical(&model, &target) {
        Ok(phi) => {
            let b = map_is_bijective(&phi)?;
            let passed = b.is_bijective();
            r.check("canonical_map_bijective", passed, (!passed).then(|| b.to_string()));
        }
        Err(e) => {
            r.check("canonical_map_bijective", false, Some(e.to_string()));
        }
    }
    r.note(format!("model length {}, generic rank {}", model.vector_space_dim()?, model.generic_rank()));
    Ok(r)
}

/// The pullback corner built in [`check_pullback_square`], when the
/// precondition holds.
struct Square {
    report: VerifierReport,
    corner: Option<SubquotientModule>,
}

fn pullback_square(ring: &Arc<PolyRing>, f: &[Poly], x: &Poly, q: usize) -> Result<Square, MultitorError> {
    let n = f.len();
    if q > n {
        return Err(MultitorError::DegreeOutOfRange { q, max: n });
    }
    let mut r = VerifierReport::new("pullback", format!("f = {}, x = {x}, q = {q}", show_seq(f)));
    if !r.precondition("x_nonzero", !x.is_zero(), None) {
        return Ok(Square { report: r, corner: None });
    }
    let (ker, im) = koszul_cycles_and_boundaries(ring, f, q)?;
    let h = quotient_module(&ker, &im)?;
    let witness = mult_kernel_witness(&h, x)?;
    let injective = witness.is_none();
    r.precondition("x_injective_on_homology", injective, witness.map(|w| w.to_string()));

    let x_ker = scale_submodule(&ker, x)?;
    let x_im = scale_submodule(&im, x)?;
    let w = span_difference(&submodule_intersect(&im, &x_ker)?, &x_im);
    r.check("boundaries_meet_scaled_cycles", w.is_none(), w);
    if !injective {
        return Ok(Square { report: r, corner: None });
    }

    // ker/x·ker -> ker/(im + x·ker) <- ker/im, and the model ker/x·im over it
    let top_right = quotient_module(&ker, &x_ker)?;
    let bottom_right = quotient_module(&ker, &submodule_sum(&im, &x_ker)?)?;
    let f_map = ModuleMap::canonical(&top_right, &bottom_right)?;
    let g_map = ModuleMap::canonical(&h, &bottom_right)?;
    let pb = pullback(&f_map, &g_map)?;
    let commutes = pb.p1.then(&f_map)?.equals(&pb.p2.then(&g_map)?)?;
    r.check("square_commutes", commutes, None);

    let model = quotient_module(&ker, &x_im)?;
    let h1 = ModuleMap::canonical(&model, &top_right)?;
    let h2 = ModuleMap::canonical(&model, &h)?;
    let phi = pb.induced_map(&h1, &h2)?;
    let b = map_is_bijective(&phi)?;
    let passed = b == Bijectivity::Bijective;
    r.check("canonical_map_bijective", passed, (!passed).then(|| b.to_string()));
    if h.is_zero() {
        r.note("bottom row vanishes");
    }
    Ok(Square { report: r, corner: Some(pb.module) })
}

/// Certifies that `ker/x·im` is the pullback of
/// `ker ⊗ R/(x) -> H ⊗ R/(x) <- H`, after checking that `x` is injective
/// on `H = ker/im`.
pub fn check_pullback_square(ring: &Arc<PolyRing>, f: &[Poly], x: &Poly, q: usize) -> Result<VerifierReport, MultitorError> {
    Ok(pullback_square(ring, f, x, q)?.report)
}

/// `Tor_1(R/I, R/(x)) = (I : x)/I` vanishes; higher Tor vanishes because
/// `R --x--> R` resolves `R/(x)`.
pub fn check_tor_independence(ring: &Arc<PolyRing>, ideal: &[Poly], x: &Poly) -> Result<VerifierReport, MultitorError> {
    if x.is_zero() {
        return Err(MultitorError::ZeroScalar);
    }
    let mut r = VerifierReport::new("torind", format!("I = {}, x = {x}", show_seq(ideal)));
    let gb = ideal_groebner(ring, ideal);
    let colon = ideal_quotient(ideal, x)?;
    let witness = colon.iter().find(|g| !gb.contains(&FreeVector::new(ring, vec![(*g).clone()])).unwrap_or(false));
    let vanishes = witness.is_none();
    r.check("colon_equals_ideal", vanishes, witness.map(|g| format!("{g} in (I : {x}) but not in I")));

    let tor1 = tor_pair(ring, std::slice::from_ref(x), ideal, 1)?;
    r.check("tor1_via_resolution_agrees", tor1.is_zero() == vanishes, None);
    let res = free_resolution(ring, std::slice::from_ref(x), 2)?;
    r.check("higher_tor_vanishes", res.length() <= 1, None);
    Ok(r)
}

/// Tor of the hypersurfaces `x f_i` computed three ways: Koszul homology of
/// the scaled sequence, the model `ker/x·im`, and the pullback corner.
pub fn verify_main_theorem_affine(
    ring: &Arc<PolyRing>,
    f: &[Poly],
    x: &Poly,
    qmax: usize,
) -> Result<VerifierReport, MultitorError> {
    if x.is_zero() {
        return Err(MultitorError::ZeroScalar);
    }
    if let Some(i) = f.iter().position(Poly::is_zero) {
        return Err(MultitorError::ZeroGenerator { index: i + 1 });
    }
    let n = f.len();
    let xf = scaled(f, x);
    let mut r = VerifierReport::new(
        "main",
        format!("f = {}, x = {x}, qmax = {qmax}, hypersurfaces {}", show_seq(f), show_seq(&xf)),
    );
    let kxf = koszul_complex(ring, &xf);
    for q in 0..=qmax {
        if q > n {
            let t = multitor_hypersurfaces(ring, &xf, q)?;
            r.check(&format!("q{q}.vanishes"), t.is_zero(), None);
            continue;
        }
        let a = homology(&kxf, -(q as i64))?;
        let b = scaled_cohomology_model(ring, f, x, q)?;
        let w = subquotient_difference(&a, &b);
        r.check(&format!("q{q}.koszul_equals_model"), w.is_none(), w);

        let square = pullback_square(ring, f, x, q)?;
        r.absorb(&format!("q{q}.pullback"), square.report);
        if let Some(corner) = square.corner {
            r.note(format!(
                "q{q}: Tor length {}, generic rank {}, pullback ambient rank {}",
                a.vector_space_dim()?,
                a.generic_rank(),
                corner.ambient_rank()
            ));
        }
    }
    r.note("the twist by O(D) is trivial on an affine chart; no twist factor applied");
    Ok(r)
}

/// For `P, Q ⊆ N`, the square `N/(P∩Q) -> N/P, N/Q -> N/(P+Q)` is cartesian.
pub fn check_cartesian_square(
    n: &SubquotientModule,
    p: &SubquotientModule,
    q: &SubquotientModule,
) -> Result<VerifierReport, MultitorError> {
    let mut r = VerifierReport::new("square", format!("N = <{}>, P = <{}>, Q = <{}>", show_vecs(n), show_vecs(p), show_vecs(q)));
    let nested = n.gens_gb().contains_all(p.gens())? && n.gens_gb().contains_all(q.gens())?;
    if !r.precondition("submodules_nested", nested, None) {
        return Ok(r);
    }
    let m_p = quotient_module(n, p)?;
    let m_q = quotient_module(n, q)?;
    let m_sum = quotient_module(n, &submodule_sum(p, q)?)?;
    let m_cap = quotient_module(n, &submodule_intersect(p, q)?)?;
    let f_map = ModuleMap::canonical(&m_p, &m_sum)?;
    let g_map = ModuleMap::canonical(&m_q, &m_sum)?;
    let pb = pullback(&f_map, &g_map)?;
    let commutes = pb.p1.then(&f_map)?.equals(&pb.p2.then(&g_map)?)?;
    r.check("square_commutes", commutes, None);
    let phi = pb.induced_map(&ModuleMap::canonical(&m_cap, &m_p)?, &ModuleMap::canonical(&m_cap, &m_q)?)?;
    let b = map_is_bijective(&phi)?;
    let passed = b.is_bijective();
    r.check("canonical_map_bijective", passed, (!passed).then(|| b.to_string()));
    Ok(r)
}

fn show_vecs(m: &SubquotientModule) -> String {
    m.gens().iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}
