//! Reduced Gröbner bases, membership with a certificate, colon ideals and
//! module syzygies, over Q and over F_7.
//!
//! cargo run --example groebner_basics

use std::error::Error;

use koszulkit::groebner::{ideal_basis, ideal_quotient, membership_with_lift, quotient_dim, syzygy, FreeVector};
use koszulkit::modmath::FreeMatrix;
use koszulkit::ring::{parse_poly, FieldSpec, MonomialOrder, PolyRing};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = PolyRing::rational(&["x", "y"]);
    let p = |s: &str| parse_poly(s, &r);

    let gb = ideal_basis(&r, &[p("x^2 + y^2")?, p("x - y")?]);
    println!("GB(x^2 + y^2, x - y) = {}", gb.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    assert_eq!(gb.len(), 2);

    // x^3 = x*(x^2 + y^2) - x*y^2 is not in (x^2 + y^2); x^3 + x*y^2 is
    let gens = [FreeVector::new(&r, vec![p("x^2 + y^2")?])];
    let v = FreeVector::new(&r, vec![p("x^3 + x*y^2")?]);
    let lift = membership_with_lift(&v, &gens)?.expect("member");
    println!("x^3 + x*y^2 = ({}) * (x^2 + y^2)", lift[0]);
    assert!(membership_with_lift(&FreeVector::new(&r, vec![p("x^3")?]), &gens)?.is_none());

    let colon = ideal_quotient(&[p("x*y")?, p("y^2")?], &p("y")?)?;
    println!("(x*y, y^2) : y = ({})", colon.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    assert_eq!(colon, vec![p("x")?, p("y")?]);

    let m = FreeMatrix::from_rows(&r, 2, vec![vec![p("x")?, p("y")?]]);
    let syz = syzygy(&m);
    println!("syzygies of [x, y]: {}", syz.column(0));
    assert_eq!(syz.ncols(), 1);

    let f7 = PolyRing::new(["x", "y"], FieldSpec::prime(7)?, MonomialOrder::GrevLex)?;
    let q = |s: &str| parse_poly(s, &f7);
    let dim = quotient_dim(&f7, &[q("x^3 - y")?, q("y^2 - 8")?])?;
    println!("dim F7[x,y]/(x^3 - y, y^2 - 1) = {dim}");
    assert_eq!(dim, 6);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("groebner_basics");
}
