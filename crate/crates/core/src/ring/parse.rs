use std::iter::Peekable;
use std::str::CharIndices;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Monomial, Poly, PolyRing, RingError};

/// Parses `term (('+'|'-') term)*` where a term is a `*`-separated product
/// of coefficients `int('/'nat)?` and powers `var('^'nat)?`.
pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Poly, RingError> {
    let mut parser = Parser { text, chars: text.char_indices().peekable(), ring };
    let poly = parser.poly()?;
    parser.skip_ws();
    if let Some((pos, c)) = parser.chars.peek().copied() {
        return Err(parser.malformed(pos, &format!("unexpected '{c}'")));
    }
    Ok(poly)
}

struct Parser<'a> {
    text: &'a str,
    chars: Peekable<CharIndices<'a>>,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn malformed(&self, pos: usize, msg: &str) -> RingError {
        RingError::MalformedTerm(format!("{msg} at offset {pos} in \"{}\"", self.text))
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn end_pos(&self) -> usize {
        self.text.len()
    }

    fn poly(&mut self) -> Result<Poly, RingError> {
        let mut terms: Vec<(Monomial, BigRational)> = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            let mut negative = false;
            if !first {
                match self.chars.peek().copied() {
                    None => break,
                    Some((_, '+')) => {
                        self.chars.next();
                    }
                    Some((_, '-')) => {
                        self.chars.next();
                        negative = true;
                    }
                    Some((pos, c)) => return Err(self.malformed(pos, &format!("expected '+' or '-', found '{c}'"))),
                }
            }
            // unary signs, e.g. "x + -1*y" or a leading "-x"
            loop {
                self.skip_ws();
                match self.chars.peek() {
                    Some((_, '-')) => {
                        self.chars.next();
                        negative = !negative;
                    }
                    Some((_, '+')) => {
                        self.chars.next();
                    }
                    _ => break,
                }
            }
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            terms.push((m, c));
            first = false;
        }
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero());
        Poly::from_terms(self.ring, terms)
    }

    fn term(&mut self) -> Result<(Monomial, BigRational), RingError> {
        let mut coeff = BigRational::one();
        let mut mono = Monomial::one(self.ring.nvars());
        loop {
            self.skip_ws();
            match self.chars.peek().copied() {
                Some((_, c)) if c.is_ascii_digit() => coeff *= self.coefficient()?,
                Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {
                    let (var, exp) = self.power()?;
                    mono = mono.mul(&Monomial::var(self.ring.nvars(), var, exp));
                }
                Some((pos, c)) => return Err(self.malformed(pos, &format!("expected factor, found '{c}'"))),
                None => return Err(self.malformed(self.end_pos(), "expected factor")),
            }
            self.skip_ws();
            match self.chars.peek() {
                Some((_, '*')) => {
                    self.chars.next();
                }
                _ => return Ok((mono, coeff)),
            }
        }
    }

    fn natural(&mut self) -> Result<BigInt, RingError> {
        self.skip_ws();
        let end = self.end_pos();
        let start = self.chars.peek().map_or(end, |(p, _)| *p);
        let mut end = start;
        while let Some((p, c)) = self.chars.peek().copied() {
            if !c.is_ascii_digit() {
                break;
            }
            end = p + c.len_utf8();
            self.chars.next();
        }
        if end == start {
            return Err(self.malformed(start, "expected a natural number"));
        }
        Ok(self.text[start..end].parse().expect("digits"))
    }

    fn coefficient(&mut self) -> Result<BigRational, RingError> {
        let num = self.natural()?;
        self.skip_ws();
        if let Some((pos, '/')) = self.chars.peek().copied() {
            self.chars.next();
            let den = self.natural()?;
            if den.is_zero() {
                return Err(self.malformed(pos, "zero denominator"));
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn power(&mut self) -> Result<(usize, u32), RingError> {
        let start = self.chars.peek().map(|(p, _)| *p).unwrap();
        let mut end = start;
        while let Some((p, c)) = self.chars.peek().copied() {
            if !(c.is_ascii_alphanumeric() || c == '_') {
                break;
            }
            end = p + c.len_utf8();
            self.chars.next();
        }
        let name = &self.text[start..end];
        let var = self
            .ring
            .var_index(name)
            .ok_or_else(|| RingError::UnknownVariable(name.to_string()))?;
        self.skip_ws();
        if let Some((pos, '^')) = self.chars.peek().copied() {
            self.chars.next();
            let e = self.natural()?;
            let e: u32 = e.try_into().map_err(|_| self.malformed(pos, "exponent too large"))?;
            return Ok((var, e));
        }
        Ok((var, 1))
    }
}
