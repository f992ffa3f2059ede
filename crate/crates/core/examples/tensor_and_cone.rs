//! K(g) ⊗ K(h) against K(g, h), and the cone of multiplication by t on
//! K(g) against K(g, t).
//!
//! cargo run --example tensor_and_cone

use std::error::Error;

use koszulkit::complexes::{homology, koszul_complex, mapping_cone, tensor_complex, FreeComplex};
use koszulkit::multitor::{multitor_hypersurfaces, multitor_via_tensor};
use koszulkit::ring::{parse_poly, PolyRing};

fn profile(c: &FreeComplex) -> Result<Vec<(String, usize)>, Box<dyn Error>> {
    (0..=c.length())
        .map(|q| {
            let h = homology(c, -(q as i64))?;
            Ok((h.vector_space_dim()?.to_string(), h.generic_rank()))
        })
        .collect()
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // not regular, and every homology module has finite length
    let r = PolyRing::rational(&["x", "y"]);
    let p = |s: &str| parse_poly(s, &r);
    let f = [p("x^2")?, p("x*y")?, p("y^2")?];

    let direct = koszul_complex(&r, &f);
    let split = tensor_complex(&koszul_complex(&r, &f[..2]), &koszul_complex(&r, &f[2..]))?;
    println!("K(f) homology:       {:?}", profile(&direct)?);
    println!("K(g) ⊗ K(h) homology: {:?}", profile(&split)?);
    assert_eq!(split.ranks(), direct.ranks());
    assert!(homology(&split, 0)?.same_spans(&homology(&direct, 0)?)?);
    assert_eq!(profile(&split)?, profile(&direct)?);

    let cone = mapping_cone(&f[2], &koszul_complex(&r, &f[..2]));
    println!("cone(y^2) homology:  {:?}", profile(&cone)?);
    assert_eq!(profile(&cone)?, profile(&direct)?);

    // two code paths for Tor of hypersurfaces
    for q in 0..=3 {
        let a = multitor_hypersurfaces(&r, &f, q)?;
        let b = multitor_via_tensor(&r, &f, q)?;
        assert_eq!(a.vector_space_dim()?, b.vector_space_dim()?);
        assert_eq!(a.generic_rank(), b.generic_rank());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("tensor_and_cone");
}
