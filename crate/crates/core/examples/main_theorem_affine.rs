//! Tor of the hypersurfaces x f_1, ..., x f_n three ways: Koszul homology of
//! x f, the model ker/x·im, and the fiber product. All on one affine chart.
//!
//! cargo run --example main_theorem_affine

use std::error::Error;

use koszulkit::multitor::verify_main_theorem_affine;
use koszulkit::ring::{parse_poly, PolyRing};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = PolyRing::rational(&["x", "y", "z", "w"]);
    let p = |s: &str| parse_poly(s, &r);
    let x = p("x")?;
    for f in [vec![p("y")?, p("z")?], vec![p("y*z")?, p("y*w")?], vec![p("y")?, p("z")?, p("w")?]] {
        let report = verify_main_theorem_affine(&r, &f, &x, f.len() + 1)?;
        println!("{}: {}", report.instance, report.conclusion());
        for note in &report.notes {
            println!("  {note}");
        }
        assert!(report.is_verified(), "{}", report.to_text());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("main_theorem_affine");
}
