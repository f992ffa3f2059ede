//! Exact coefficient fields, monomial orders and sparse multivariate
//! polynomials.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{FieldSpec, Scalar};
pub use monomial::{monomial_cmp, Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::{ArithOp, Poly, PolyRing};

pub(crate) use poly::same_ring;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed term: {0}")]
    MalformedTerm(String),
    #[error("coefficient {0} is not representable in F_{1}")]
    ZeroCharacteristicOverflow(String, u64),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("exponent vectors have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u64),
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
}
