//! Scaling a sequence by x scales the Koszul differentials, so the
//! homology of K(x f) is ker ∂_f / x · im ∂_f. For a regular sequence that
//! model is ker ⊗ R/(x).
//!
//! cargo run --example scaled_koszul

use std::error::Error;

use koszulkit::multitor::{check_cor_regular, check_prop_affine, scaled_cohomology_model};
use koszulkit::ring::{parse_poly, PolyRing};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = PolyRing::rational(&["x", "y", "z", "w"]);
    let p = |s: &str| parse_poly(s, &r);
    let x = p("x")?;

    // no regularity needed: repeated generators and monomial products
    for f in [vec![p("y*z")?, p("y*z")?], vec![p("y*z")?, p("y*w")?], vec![p("y")?, p("z")?, p("w")?]] {
        for q in 0..=f.len() {
            let report = check_prop_affine(&r, &f, &x, q)?;
            assert!(report.is_verified(), "{}", report.to_text());
        }
    }
    print!("{}", check_prop_affine(&r, &[p("y*z")?, p("y*w")?], &x, 1)?.to_text());

    let f = [p("y")?, p("z")?];
    let model = scaled_cohomology_model(&r, &f, &x, 1)?;
    println!("H^-1 of K(x*y, x*z) = {}", model.describe());
    let report = check_cor_regular(&r, &f, &x, 1)?;
    print!("{}", report.to_text());
    assert!(report.is_verified());

    let report = check_cor_regular(&r, &[p("y*z")?, p("y*w")?], &x, 1)?;
    println!("non-regular input: {}", report.conclusion());
    assert_eq!(report.conclusion().label(), "PreconditionFailed");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("scaled_koszul");
}
