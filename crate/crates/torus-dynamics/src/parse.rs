//! Text input: integer polynomials in `x` (operators `+ - * ^`, optional
//! parentheses, or the canonical `[c0,c1,...]` coefficient form) and
//! row-major bracketed matrices with entries `a`, `a+b*w` or `a+b*i`
//! according to the selected ring.

use crate::error::{Error, Result};
use crate::num::poly::{from_coeff_string, IntPolynomial};
use crate::torus::matrix::TorusMatrix;
use crate::torus::ring::{RingElement, RingTag};
use num_bigint::BigInt;

/// Parses a polynomial in the expression grammar, e.g. `x^3-3*x+1`, or in
/// the canonical coefficient form `[1,-3,0,1]`.
pub fn parse_polynomial(text: &str) -> Result<IntPolynomial> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        return from_coeff_string(trimmed);
    }
    let mut p = PolyParser {
        chars: trimmed.char_indices().collect(),
        pos: 0,
    };
    let poly = p.expression()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct PolyParser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl PolyParser {
    fn error(&self, msg: &str) -> Error {
        let at = self
            .chars
            .get(self.pos)
            .map(|(i, _)| *i)
            .unwrap_or_else(|| self.chars.last().map(|(i, _)| i + 1).unwrap_or(0));
        Error::Parse {
            pos: at,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expression(&mut self) -> Result<IntPolynomial> {
        self.skip_ws();
        let mut negative = false;
        if matches!(self.peek(), Some('+') | Some('-')) {
            negative = self.bump() == Some('-');
        }
        let mut acc = self.term()?;
        if negative {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some('-') => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPolynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.bump();
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<IntPolynomial> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let e = self.unsigned_integer()?;
            let e: usize = e
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IntPolynomial> {
        self.skip_ws();
        match self.peek() {
            Some('x') => {
                self.bump();
                Ok(IntPolynomial::from_i64(&[0, 1]))
            }
            Some('(') => {
                self.bump();
                let inner = self.expression()?;
                self.skip_ws();
                if self.bump() != Some(')') {
                    return Err(self.error("expected closing parenthesis"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.unsigned_integer()?;
                Ok(IntPolynomial::constant(BigInt::from(n)))
            }
            Some('.') => Err(self.error("non-integer coefficient")),
            _ => Err(self.error("expected a coefficient, x, or parenthesis")),
        }
    }

    fn unsigned_integer(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        if self.peek() == Some('.') {
            return Err(self.error("non-integer coefficient"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
        digits
            .parse()
            .map_err(|_| self.error("integer literal too large"))
    }
}

/// Parses a square matrix in row-major nested brackets with ring entries,
/// e.g. `[[0,1,0],[0,0,1],[-1,3,0]]` over `z` or `[[1+2*w,0],[0,1]]` over
/// `zw`.
pub fn parse_matrix(text: &str, tag: RingTag) -> Result<TorusMatrix> {
    let s = text.trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::invalid("matrix must be wrapped in [...]"))?;
    let mut rows: Vec<Vec<RingElement>> = Vec::new();
    let mut rest = inner.trim_start();
    while !rest.is_empty() {
        if !rest.starts_with('[') {
            return Err(Error::invalid(format!(
                "expected a row starting with '[', found {rest:?}"
            )));
        }
        let close = rest
            .find(']')
            .ok_or_else(|| Error::invalid("unterminated matrix row"))?;
        let row_text = &rest[1..close];
        let mut row = Vec::new();
        for cell in row_text.split(',') {
            row.push(parse_ring_element(cell.trim(), tag)?);
        }
        rows.push(row);
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
        } else if !rest.is_empty() {
            return Err(Error::invalid("expected ',' between matrix rows"));
        }
    }
    TorusMatrix::new(rows)
}

/// Parses `a`, `b*mu`, `mu`, `a+b*mu`, `a-b*mu` and the like, where `mu` is
/// the ring's generator symbol.
pub fn parse_ring_element(text: &str, tag: RingTag) -> Result<RingElement> {
    let symbol = tag.generator_symbol();
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::invalid("empty matrix entry"));
    }
    let mut a = BigInt::from(0);
    let mut b = BigInt::from(0);
    // split into signed terms
    let mut terms: Vec<String> = Vec::new();
    let mut current = String::new();
    for (i, c) in s.chars().enumerate() {
        if (c == '+' || c == '-') && i > 0 {
            terms.push(std::mem::take(&mut current));
            current.push(c);
        } else {
            current.push(c);
        }
    }
    terms.push(current);
    for term in &terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1i64, rest),
            None => (1i64, term.strip_prefix('+').unwrap_or(term)),
        };
        if body.is_empty() {
            return Err(Error::invalid(format!("bad matrix entry {text:?}")));
        }
        let is_gen_term = symbol.map_or(false, |sym| body.ends_with(sym));
        if is_gen_term {
            let sym = symbol.unwrap();
            let coeff_part = &body[..body.len() - sym.len_utf8()];
            let coeff_part = coeff_part.strip_suffix('*').unwrap_or(coeff_part);
            let coeff: BigInt = if coeff_part.is_empty() {
                BigInt::from(1)
            } else {
                coeff_part
                    .parse()
                    .map_err(|_| Error::invalid(format!("bad coefficient in {text:?}")))?
            };
            b += coeff * BigInt::from(sign);
        } else {
            let v: BigInt = body
                .parse()
                .map_err(|_| Error::invalid(format!("bad integer in matrix entry {text:?}")))?;
            a += v * BigInt::from(sign);
        }
    }
    RingElement::new(a, b, tag)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_spec_examples() {
        assert_eq!(
            parse_polynomial("x^3-3*x+1").unwrap(),
            IntPolynomial::from_i64(&[1, -3, 0, 1])
        );
        assert_eq!(parse_polynomial("x").unwrap(), IntPolynomial::from_i64(&[0, 1]));
        // like-term collection
        assert_eq!(
            parse_polynomial("x^2-3*x^2").unwrap(),
            IntPolynomial::from_i64(&[0, 0, -2])
        );
    }

    #[test]
    fn polynomial_round_trip_canonical_form() {
        let p = parse_polynomial("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1").unwrap();
        let printed = p.coeff_string();
        assert_eq!(parse_polynomial(&printed).unwrap(), p);
    }

    #[test]
    fn polynomial_errors_carry_positions() {
        let err = parse_polynomial("x^3-3*y+1").unwrap_err();
        match err {
            Error::Parse { pos, .. } => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial("x^").is_err());
        assert!(parse_polynomial("2.5*x").is_err());
        assert!(parse_polynomial("").is_err());
    }

    #[test]
    fn parenthesized_products() {
        assert_eq!(
            parse_polynomial("(x-1)*(x+1)").unwrap(),
            IntPolynomial::from_i64(&[-1, 0, 1])
        );
        assert_eq!(
            parse_polynomial("-(x^2+1)").unwrap(),
            IntPolynomial::from_i64(&[-1, 0, -1])
        );
    }

    #[test]
    fn matrix_entries_over_each_ring() {
        let m = parse_matrix("[[0,1,0],[0,0,1],[-1,3,0]]", RingTag::Integer).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(m.get(2, 1), &RingElement::from_int(3, RingTag::Integer));
        let m = parse_matrix("[[1+2*w,0],[-w,1-w]]", RingTag::Eisenstein).unwrap();
        assert_eq!(
            m.get(0, 0),
            &RingElement::from_parts(1, 2, RingTag::Eisenstein).unwrap()
        );
        assert_eq!(
            m.get(1, 0),
            &RingElement::from_parts(0, -1, RingTag::Eisenstein).unwrap()
        );
        let m = parse_matrix("[[i,0],[0,0+1*i]]", RingTag::Gaussian).unwrap();
        assert_eq!(m.get(0, 0), m.get(1, 1));
    }

    #[test]
    fn matrix_round_trip() {
        let text = "[[1+2*w,0],[-1*w,1-1*w]]";
        let m = parse_matrix(text, RingTag::Eisenstein).unwrap();
        let printed = m.to_text();
        let again = parse_matrix(&printed, RingTag::Eisenstein).unwrap();
        assert_eq!(m, again);
    }

    #[test]
    fn matrix_errors() {
        // generator from the wrong ring
        assert!(parse_matrix("[[w]]", RingTag::Integer).is_err());
        assert!(parse_matrix("[[i]]", RingTag::Eisenstein).is_err());
        // non-square
        assert!(parse_matrix("[[1,2],[3]]", RingTag::Integer).is_err());
        // malformed
        assert!(parse_matrix("[1,2]", RingTag::Integer).is_err());
        assert!(parse_matrix("[[1,2],[3,x]]", RingTag::Integer).is_err());
    }
}
