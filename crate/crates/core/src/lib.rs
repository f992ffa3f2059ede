//! Commutative algebra over `Q` and `F_p`: Gröbner bases for polynomial
//! modules, subquotient modules and maps between them, Koszul complexes
//! and free resolutions, and Tor of hypersurfaces.
//!
//! The examples directory walks through each layer. A small job language
//! in [`cli`] drives the same computations from the `koszulkit` binary.
//!
//! ```
//! use koszulkit::ring::{parse_poly, PolyRing};
//! use koszulkit::multitor::serre_multiplicity;
//!
//! let r = PolyRing::rational(&["x", "y", "z", "w"]);
//! let p = |s: &str| parse_poly(s, &r).unwrap();
//! let i = [p("x*z"), p("x*w"), p("y*z"), p("y*w")];
//! let j = [p("x - z"), p("y - w")];
//! assert_eq!(serre_multiplicity(&r, &i, &j).unwrap(), 2);
//! ```

pub mod cli;
pub mod complexes;
pub mod groebner;
pub mod instances;
pub mod modmath;
pub mod multitor;
pub mod ring;

pub use groebner::FreeVector;
pub use modmath::{ModuleMap, SubquotientModule};
pub use ring::{parse_poly, Poly, PolyRing};
