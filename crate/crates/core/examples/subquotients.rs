//! Subquotient modules U/V, kernels and images, lengths, maps and a fiber
//! product.
//!
//! cargo run --example subquotients

use std::error::Error;

use koszulkit::groebner::Length;
use koszulkit::modmath::{
    image_module, kernel_module, map_is_bijective, pullback, quotient_module, Bijectivity, FreeMatrix, ModuleMap,
    SubquotientModule,
};
use koszulkit::ring::{parse_poly, PolyRing};
use koszulkit::FreeVector;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = PolyRing::rational(&["x", "y"]);
    let p = |s: &str| parse_poly(s, &r);

    let m = FreeMatrix::from_rows(&r, 2, vec![vec![p("x")?, p("y")?]]);
    let ker = kernel_module(&m);
    let im = image_module(&m);
    println!("ker [x, y]: {}", ker.describe());
    assert_eq!(ker.generic_rank(), 1);
    assert_eq!(im.generic_rank(), 1);

    // R/(x^2, y) has length 2, R/(x) has infinite length
    let unit = |s: &str| -> Result<FreeVector, Box<dyn Error>> { Ok(FreeVector::new(&r, vec![p(s)?])) };
    let a = SubquotientModule::cokernel(&r, 1, vec![unit("x^2")?, unit("y")?])?;
    assert_eq!(a.length()?, Length::Finite(2));
    let line = SubquotientModule::cokernel(&r, 1, vec![unit("x")?])?;
    assert_eq!(line.vector_space_dim()?, Length::Infinite);

    // (x)/(x^2, x*y) inside R/(x^2, x*y) is a copy of k
    let big = SubquotientModule::cokernel(&r, 1, vec![unit("x^2")?, unit("x*y")?])?;
    let sub = SubquotientModule::new(&r, 1, vec![unit("x")?], vec![unit("x^2")?, unit("x*y")?])?;
    let w = SubquotientModule::submodule(&r, 1, vec![unit("x")?])?;
    let r_mod_x = quotient_module(&SubquotientModule::free(&r, 1), &w)?;
    println!("socle element: {}", sub.describe());
    assert_eq!(sub.length()?, Length::Finite(1));

    // R/(x^2, xy) -> R/(x) <- R/(x, y); the fiber product is R/(x^2, xy) again
    let f = ModuleMap::canonical(&big, &r_mod_x)?;
    let point = SubquotientModule::cokernel(&r, 1, vec![unit("x")?, unit("y")?])?;
    let g = ModuleMap::canonical(&SubquotientModule::cokernel(&r, 1, vec![unit("x")?, unit("y^2")?])?, &point)?;
    let h = ModuleMap::canonical(&r_mod_x, &point)?;
    let pb = pullback(&f.then(&h)?, &g)?;
    println!("pullback: {}", pb.module.describe());
    assert!(pb.p1.then(&f)?.then(&h)?.equals(&pb.p2.then(&g)?)?);

    let id = ModuleMap::identity(&big);
    assert_eq!(map_is_bijective(&id)?, Bijectivity::Bijective);
    let proj = ModuleMap::canonical(&big, &point)?;
    println!("R/(x^2, xy) -> k: {}", map_is_bijective(&proj)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("subquotients");
}
