//! Minimal free resolutions and their Betti numbers.
//!
//! cargo run --example free_resolution

use std::error::Error;

use koszulkit::complexes::{free_resolution, ComplexError};
use koszulkit::ring::{parse_poly, PolyRing};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = PolyRing::rational(&["x", "y", "z", "w"]);
    let p = |s: &str| parse_poly(s, &r);

    let planes = [p("x*z")?, p("x*w")?, p("y*z")?, p("y*w")?];
    let res = free_resolution(&r, &planes, 6)?;
    print!("{}", res.report());
    assert_eq!(res.ranks(), [1, 4, 4, 1]);

    // twisted cubic: Betti numbers 1 3 2
    let cubic = [p("x*z - y^2")?, p("x*w - y*z")?, p("y*w - z^2")?];
    let res = free_resolution(&r, &cubic, 6)?;
    println!("twisted cubic: {:?}", res.ranks());
    assert_eq!(res.ranks(), [1, 3, 2]);

    // the unit ideal resolves R/R = 0
    assert_eq!(free_resolution(&r, &[p("x")?, p("1")?], 6)?.ranks(), [0]);

    let err = free_resolution(&r, &planes, 1).unwrap_err();
    assert!(matches!(err, ComplexError::ResolutionTruncated { max_len: 1 }));
    println!("with max_len 1: {err}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("free_resolution");
}
