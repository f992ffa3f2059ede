//! Two planes in A^4 meeting at the origin. The naive intersection length is
//! 3, Tor_1 corrects it by 1, and the multiplicity is 2.
//!
//! cargo run --example serre_two_planes

use std::error::Error;

use koszulkit::multitor::{serre_multiplicity, tor_pair, tor_report};
use koszulkit::ring::{parse_poly, PolyRing};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = PolyRing::rational(&["x", "y", "z", "w"]);
    let p = |s: &str| parse_poly(s, &r);
    let i = [p("x*z")?, p("x*w")?, p("y*z")?, p("y*w")?];
    let j = [p("x - z")?, p("y - w")?];

    let report = tor_report(&r, &i, &j, 3)?;
    print!("{report}");
    let lengths: Vec<_> = (0..=3).map(|q| report.length(q).and_then(|l| l.finite())).collect();
    assert_eq!(lengths, [Some(3), Some(1), Some(0), Some(0)]);

    // same numbers from the other side
    for q in 0..=3 {
        let swapped = tor_pair(&r, &j, &i, q)?.length()?;
        assert_eq!(swapped, report.length(q).unwrap());
    }

    let m = serre_multiplicity(&r, &i, &j)?;
    println!("multiplicity: {m}");
    assert_eq!(m, 2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("serre_two_planes");
}
