//! Tor_1(R/I, R/(h)) = (I : h)/I, so a hyperplane is Tor-independent of
//! R/I exactly when it is a nonzerodivisor modulo I.
//!
//! cargo run --example tor_independence

use std::error::Error;

use koszulkit::multitor::{check_tor_independence, tor_pair};
use koszulkit::ring::{parse_poly, PolyRing};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r = PolyRing::rational(&["x", "y", "z", "w"]);
    let p = |s: &str| parse_poly(s, &r);
    let planes = vec![p("x*z")?, p("x*w")?, p("y*z")?, p("y*w")?];

    // x - z avoids both planes (x, y) = 0 and (z, w) = 0
    let first = check_tor_independence(&r, &planes, &p("x - z")?)?;
    print!("{}", first.to_text());
    assert!(first.is_verified());

    // after the first cut the origin is an embedded point, and y - w meets it
    let mut cut = planes.clone();
    cut.push(p("x - z")?);
    let second = check_tor_independence(&r, &cut, &p("y - w")?)?;
    print!("{}", second.to_text());
    assert_eq!(second.conclusion().label(), "Refuted");

    let tor1 = tor_pair(&r, &[p("y - w")?], &cut, 1)?;
    println!("Tor_1 = {}", tor1.describe());
    assert_eq!(tor1.length()?.finite(), Some(1));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("tor_independence");
}
