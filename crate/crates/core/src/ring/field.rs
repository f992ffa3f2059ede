use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RingError;

/// Coefficients are always stored as rationals. Over a prime field they are
/// kept as integers in `[0, p)`.
pub type Scalar = BigRational;

/// The exact base field of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, RingError> {
        if !(2..(1u64 << 31)).contains(&p) || !is_prime(p) {
            return Err(RingError::InvalidPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    /// Maps an arbitrary rational into the field's canonical representative.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, RingError> {
        match self {
            FieldSpec::Rationals => Ok(q.clone()),
            FieldSpec::PrimeField(p) => {
                let p_big = BigInt::from(*p);
                let num = q.numer().mod_floor(&p_big).to_u64().unwrap();
                let den = q.denom().mod_floor(&p_big).to_u64().unwrap();
                if den == 0 {
                    return Err(RingError::ZeroCharacteristicOverflow(q.to_string(), *p));
                }
                Ok(int_scalar(mul_mod(num, inv_mod(den, *p), *p)))
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_rational(&BigRational::from_integer(BigInt::from(n)))
            .expect("integers are representable in every field")
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a + b,
            FieldSpec::PrimeField(p) => int_scalar((small(a) + small(b)) % p),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a - b,
            FieldSpec::PrimeField(p) => int_scalar((small(a) + p - small(b)) % p),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => a * b,
            FieldSpec::PrimeField(p) => int_scalar(mul_mod(small(a), small(b), *p)),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => -a,
            FieldSpec::PrimeField(p) => int_scalar((p - small(a)) % p),
        }
    }

    /// Panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            FieldSpec::Rationals => a.recip(),
            FieldSpec::PrimeField(p) => int_scalar(inv_mod(small(a), *p)),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Only rationals carry a sign; `F_p` elements print as their
    /// representative in `[0, p)`.
    pub fn is_negative(&self, a: &Scalar) -> bool {
        matches!(self, FieldSpec::Rationals) && a.is_negative()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

fn int_scalar(n: u64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

fn small(a: &Scalar) -> u64 {
    debug_assert!(a.denom().is_one());
    a.numer().to_u64().expect("prime field element out of range")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    result
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
