use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{FieldSpec, Monomial, MonomialOrder, RingError, Scalar};

/// `k[x_0, ..., x_{n-1}]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    variables: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        field: FieldSpec,
        order: MonomialOrder,
    ) -> Result<Arc<Self>, RingError> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        for (i, v) in variables.iter().enumerate() {
            let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(RingError::InvalidVariable(v.clone()));
            }
            if variables[..i].contains(v) {
                return Err(RingError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(PolyRing { variables, field, order }))
    }

    /// `Q[vars]` with grevlex.
    pub fn rational(variables: &[&str]) -> Arc<Self> {
        Self::new(variables.iter().copied(), FieldSpec::Rationals, MonomialOrder::GrevLex)
            .expect("valid variable names")
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.variables.join(","))
    }
}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Sparse polynomial; terms sorted by strictly decreasing monomial, no zero
/// coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Scalar::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Scalar) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<PolyRing>, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    /// The variable `x_i`.
    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), index, 1), Scalar::one())
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length");
        let c = ring.field().from_rational(&c).expect("coefficient representable");
        if c.is_zero() {
            return Self::zero(ring);
        }
        Poly { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self, RingError> {
        let field = ring.field();
        let order = ring.order();
        let mut raw = Vec::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(RingError::LengthMismatch(m.nvars(), ring.nvars()));
            }
            raw.push((m, field.from_rational(&c)?));
        }
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Ok(Poly { ring: ring.clone(), terms: out })
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn constant_term(&self) -> Scalar {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Scalar::zero(),
        }
    }

    pub fn arith(&self, other: &Poly, op: ArithOp) -> Result<Poly, RingError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(RingError::RingMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add_scaled(other, &Scalar::one(), None),
            ArithOp::Sub => self.add_scaled(other, &self.ring.field().from_i64(-1), None),
            ArithOp::Mul => self.mul_poly(other),
        })
    }

    /// `self + c * m * other` in a single merge pass.
    pub(crate) fn add_scaled(&self, other: &Poly, c: &Scalar, m: Option<&Monomial>) -> Poly {
        if c.is_zero() {
            return self.clone();
        }
        let field = self.ring.field();
        let order = self.ring.order();
        let shifted = other.terms.iter().map(|(om, oc)| {
            (
                m.map_or_else(|| om.clone(), |m| om.mul(m)),
                field.mul(oc, c),
            )
        });
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut lhs = self.terms.iter().peekable();
        let mut rhs = shifted.peekable();
        loop {
            match (lhs.peek(), rhs.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(lhs.next().unwrap().clone()),
                (None, Some(_)) => out.push(rhs.next().unwrap()),
                (Some(a), Some(b)) => match order.cmp(&a.0, &b.0) {
                    Ordering::Greater => out.push(lhs.next().unwrap().clone()),
                    Ordering::Less => out.push(rhs.next().unwrap()),
                    Ordering::Equal => {
                        let (am, ac) = lhs.next().unwrap();
                        let (_, bc) = rhs.next().unwrap();
                        let s = field.add(ac, &bc);
                        if !s.is_zero() {
                            out.push((am.clone(), s));
                        }
                    }
                },
            }
        }
        Poly { ring: self.ring.clone(), terms: out }
    }

    fn mul_poly(&self, other: &Poly) -> Poly {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Poly::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add_scaled(large, c, Some(m));
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::zero(&self.ring).add_scaled(self, c, None)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Poly {
        Poly::zero(&self.ring).add_scaled(self, c, Some(m))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&self.ring.field().inv(lc)),
        }
    }

    /// Exact quotient `self / divisor` when `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let field = self.ring.field();
        let (dm, dc) = divisor.leading_term().unwrap();
        let dinv = field.inv(dc);
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = dm.quotient_of(rm)?;
            let qc = field.mul(rc, &dinv);
            rem = rem.add_scaled(divisor, &field.neg(&qc), Some(&qm));
            quotient.push((qm, qc));
        }
        Some(Poly::from_sorted_terms(&self.ring, quotient))
    }

    /// Evaluates with every variable substituted by the given scalars.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let field = self.ring.field();
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.exps().iter().zip(point) {
                for _ in 0..*e {
                    t = field.mul(&t, x);
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = field.is_negative(c);
            let mag = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(mag.to_string());
            }
            for (v, &e) in self.ring.variables().iter().zip(m.exps()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            /// Panics when the operands live in different rings.
            fn $method(self, rhs: &Poly) -> Poly {
                self.arith(rhs, $op).expect("operands share a ring")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&self.ring.field().from_i64(-1))
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
