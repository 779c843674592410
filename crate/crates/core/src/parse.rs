//! Text grammar for ring elements, matrices and words.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' digits)?
//! atom   := '0' | '1' | symbol | '(' expr ')'
//! ```
//!
//! Symbols are single letters (`w`, `i`) whose meaning comes from
//! [`Symbolic::symbol`]. Whitespace is ignored.

use thiserror::Error;

use crate::rings::Symbolic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {found:?} at offset {offset} in {input:?}")]
    Unexpected { input: String, offset: usize, found: char },
    #[error("unexpected end of input in {0:?}")]
    UnexpectedEnd(String),
    #[error("symbol {symbol:?} is not defined in ring {ring}")]
    UnknownSymbol { symbol: char, ring: &'static str },
    #[error("unknown ring {0:?}")]
    UnknownRing(String),
    #[error("malformed matrix {0:?}")]
    Matrix(String),
    #[error("expected {expected} entries, found {found}")]
    Length { expected: usize, found: usize },
    #[error("{0}")]
    Other(String),
}

struct Parser<'a> {
    input: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        let chars = input.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Self { input, chars, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn unexpected(&self) -> ParseError {
        match self.chars.get(self.pos) {
            Some(&(offset, found)) => ParseError::Unexpected { input: self.input.to_string(), offset, found },
            None => ParseError::UnexpectedEnd(self.input.to_string()),
        }
    }

    fn expr<R: Symbolic>(&mut self) -> Result<R, ParseError> {
        let mut acc = self.term::<R>()?;
        while let Some(op) = self.peek() {
            match op {
                '+' => {
                    self.pos += 1;
                    acc += self.term::<R>()?;
                }
                '-' => {
                    self.pos += 1;
                    acc -= self.term::<R>()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term<R: Symbolic>(&mut self) -> Result<R, ParseError> {
        let mut acc = self.factor::<R>()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc *= self.factor::<R>()?;
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() => {
                    acc *= self.factor::<R>()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor<R: Symbolic>(&mut self) -> Result<R, ParseError> {
        let base = self.atom::<R>()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let exp = self.digits()?;
            Ok(base.pow(exp))
        } else {
            Ok(base)
        }
    }

    fn digits(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(c as u64 - '0' as u64))
                .ok_or_else(|| ParseError::Other("exponent overflow".into()))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.unexpected());
        }
        Ok(value)
    }

    fn atom<R: Symbolic>(&mut self) -> Result<R, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr::<R>()?;
                if self.peek() != Some(')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                // integer constants reduce mod 2
                let n = self.digits()?;
                Ok(if n % 2 == 0 { R::zero() } else { R::one() })
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                R::symbol(c).ok_or(ParseError::UnknownSymbol { symbol: c, ring: R::NAME })
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parse a ring element from its polynomial string form.
pub fn parse_ring_expr<R: Symbolic>(input: &str) -> Result<R, ParseError> {
    let mut p = Parser::new(input);
    if p.chars.is_empty() {
        return Err(ParseError::Empty);
    }
    let value = p.expr::<R>()?;
    if p.pos != p.chars.len() {
        return Err(p.unexpected());
    }
    Ok(value)
}

/// Split on `sep` at bracket/parenthesis depth zero, trimming each piece.
pub fn split_top_level(input: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in input.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(input[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(input[start..].trim());
    out
}

/// Strip one pair of enclosing square brackets.
pub(crate) fn strip_brackets(s: &str) -> Option<&str> {
    s.trim().strip_prefix('[')?.strip_suffix(']')
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{F2i, F4i, Ring, F16, F2, F4, F8};

    #[test]
    fn parses_polynomials() {
        assert_eq!(parse_ring_expr::<F8>("w^2 + 1").unwrap(), F8::new(0b101));
        assert_eq!(parse_ring_expr::<F4>("w*w").unwrap(), parse_ring_expr::<F4>("w+1").unwrap());
        assert_eq!(parse_ring_expr::<F16>("w^4").unwrap(), parse_ring_expr::<F16>("w+1").unwrap());
        assert_eq!(parse_ring_expr::<F2>("3").unwrap(), F2::ONE);
        assert_eq!(parse_ring_expr::<F2i>("i-1").unwrap(), F2i::ONE_PLUS_I);
    }

    #[test]
    fn parses_juxtaposition_and_groups() {
        let x: F4i = parse_ring_expr("(1+i)w").unwrap();
        assert_eq!(x, F4i::new(F2i::ONE_PLUS_I, F2i::ZERO) * F4i::w());
        let y: F4i = parse_ring_expr("i w + 1").unwrap();
        assert_eq!(y, F4i::new(F2i::ONE, F2i::I));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse_ring_expr::<F4>(""), Err(ParseError::Empty));
        assert!(matches!(parse_ring_expr::<F4>("i"), Err(ParseError::UnknownSymbol { symbol: 'i', .. })));
        assert!(matches!(parse_ring_expr::<F4>("w+"), Err(ParseError::UnexpectedEnd(_))));
        assert!(matches!(parse_ring_expr::<F4>("(w"), Err(ParseError::UnexpectedEnd(_))));
        assert!(matches!(parse_ring_expr::<F4>("w)"), Err(ParseError::Unexpected { .. })));
        assert!(matches!(parse_ring_expr::<F4>("w^"), Err(ParseError::UnexpectedEnd(_))));
    }

    #[test]
    fn splits_at_depth_zero() {
        assert_eq!(split_top_level("1,w,0", ','), vec!["1", "w", "0"]);
        assert_eq!(split_top_level("[[1,0],[0,1]], [[0,1],[1,0]]", ','), vec!["[[1,0],[0,1]]", "[[0,1],[1,0]]"]);
        assert_eq!(split_top_level("(1+i)w, 1", ','), vec!["(1+i)w", "1"]);
    }

    #[test]
    fn zero_pow_zero_is_one() {
        assert_eq!(parse_ring_expr::<F4>("0^0").unwrap(), F4::one());
    }
}
