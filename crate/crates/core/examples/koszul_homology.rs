//! Koszul complexes: exact for a regular sequence, not for (x*y, x*z).
//!
//! cargo run --example koszul_homology

use std::error::Error;

use koszulkit::complexes::{homology, koszul_complex};
use koszulkit::groebner::ideals_equal;
use koszulkit::multitor::{is_regular_sequence, Regularity};
use koszulkit::ring::{parse_poly, PolyRing};
use koszulkit::FreeVector;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = PolyRing::rational(&["x", "y", "z"]);
    let p = |s: &str| parse_poly(s, &r);

    let f = [p("x")?, p("y^2")?, p("x + z")?];
    let k = koszul_complex(&r, &f);
    print!("{}", k.report());
    assert!(is_regular_sequence(&r, &f).is_regular());
    for q in 1..=3 {
        assert!(homology(&k, -q)?.is_zero());
    }
    let h0 = homology(&k, 0)?;
    let rels: Vec<_> = h0.rels_gb().basis().iter().map(|v: &FreeVector| v.entry(0).clone()).collect();
    assert!(ideals_equal(&r, &rels, &f));
    println!("H^0 = R/({})", rels.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));

    let g = [p("x*y")?, p("x*z")?];
    match is_regular_sequence(&r, &g) {
        Regularity::NotRegular { index, witness } => println!("f_{index} kills {witness} modulo the earlier terms"),
        Regularity::Regular => unreachable!("x*z is a zerodivisor modulo x*y"),
    }
    let h1 = homology(&koszul_complex(&r, &g), -1)?;
    println!("H^-1 of K(x*y, x*z):\n{}", h1.describe());
    assert!(!h1.is_zero());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("koszul_homology");
}
