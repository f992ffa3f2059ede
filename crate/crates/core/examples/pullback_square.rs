//! When x is injective on H = ker/im, the model ker/x·im is the fiber
//! product of ker/x·ker and H over H/xH. Choosing x = y breaks injectivity
//! for f = (yz, yw), and the verifier names a killed class.
//!
//! cargo run --example pullback_square

use std::error::Error;

use koszulkit::multitor::{check_cartesian_square, check_pullback_square, Conclusion};
use koszulkit::ring::{parse_poly, PolyRing};
use koszulkit::{FreeVector, SubquotientModule};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = PolyRing::rational(&["x", "y", "z", "w"]);
    let p = |s: &str| parse_poly(s, &r);
    let f = [p("y*z")?, p("y*w")?];

    let ok = check_pullback_square(&r, &f, &p("x")?, 1)?;
    print!("{}", ok.to_text());
    assert!(ok.is_verified());

    let bad = check_pullback_square(&r, &f, &p("y")?, 1)?;
    print!("{}", bad.to_text());
    assert_eq!(
        bad.conclusion(),
        Conclusion::PreconditionFailed("x_injective_on_homology: (w, -z)".into())
    );

    // the underlying square for plain submodules P, Q of N
    let v = |a: &str, b: &str| -> Result<FreeVector, Box<dyn Error>> { Ok(FreeVector::new(&r, vec![p(a)?, p(b)?])) };
    let n = SubquotientModule::submodule(&r, 2, vec![v("x", "0")?, v("y", "z")?])?;
    let pp = SubquotientModule::submodule(&r, 2, vec![v("x*y", "0")?])?;
    let qq = SubquotientModule::submodule(&r, 2, vec![v("x^2 + y", "z")?])?;
    let square = check_cartesian_square(&n, &pp, &qq)?;
    print!("{}", square.to_text());
    assert!(square.is_verified());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("pullback_square");
}
