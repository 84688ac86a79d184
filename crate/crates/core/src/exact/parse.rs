//! Small recursive-descent reader for polynomial expressions.
//!
//! Grammar: sums and differences of products, `^` with a non-negative integer
//! exponent, parentheses, integer literals, and `/` by a nonzero constant.
//! Identifiers may end in primes, e.g. `b'`.

use num_bigint::BigInt;

use super::{ExactError, ExactScalar, MultiPoly};

struct Reader<'a> {
    s: &'a [u8],
    pos: usize,
}

pub(super) fn parse_poly(src: &str) -> Result<MultiPoly, ExactError> {
    let mut r = Reader { s: src.as_bytes(), pos: 0 };
    let p = r.expr()?;
    r.skip_ws();
    if r.pos != r.s.len() {
        return Err(r.err("trailing input"));
    }
    Ok(p)
}

impl Reader<'_> {
    fn err(&self, what: &str) -> ExactError {
        ExactError::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly, ExactError> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ExactError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc * self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let d = d.as_constant().ok_or_else(|| self.err("non-constant divisor"))?;
                    if d == ExactScalar::from_integer(0.into()) {
                        return Err(ExactError::DivisionByZero);
                    }
                    acc = acc.scale(&d.recip());
                }
                b'(' => acc = acc * self.unary()?,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, ExactError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ExactError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.s[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("bad exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, ExactError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap();
                Ok(MultiPoly::constant(ExactScalar::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len()
                    && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                while self.pos < self.s.len() && self.s[self.pos] == b'\'' {
                    self.pos += 1;
                }
                Ok(MultiPoly::var(std::str::from_utf8(&self.s[start..self.pos]).unwrap()))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}
