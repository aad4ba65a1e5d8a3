//! Reader for potentials.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := coeff? ('*'? factor)*
//! factor := 'x' INT ('^' INT)?
//! coeff  := INT ('/' INT)?
//! ```
//!
//! Whitespace is ignored between tokens. Positions in errors are 0-based
//! byte offsets into the source.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{PolyMonomial, Polynomial};
use crate::potential::Potential;
use crate::rational::Rational;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, position: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position,
            message: message.into(),
        })
    }

    fn int(&mut self) -> Result<(usize, BigInt)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok((start, text.parse().unwrap()))
    }

    fn small_int(&mut self, what: &str) -> Result<(usize, u64)> {
        let (at, v) = self.int()?;
        match u64::try_from(v) {
            Ok(x) if x <= u32::MAX as u64 => Ok((at, x)),
            _ => self.err(at, format!("{} is too large", what)),
        }
    }

    fn coeff(&mut self) -> Result<Rational> {
        let (_, num) = self.int()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let (at, den) = self.int()?;
            if den.is_zero() {
                return self.err(at, "zero denominator");
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn factor(&mut self, mono: &mut [u32]) -> Result<()> {
        let at = self.pos;
        if self.peek() != Some(b'x') {
            return self.err(self.pos, "expected a variable x<i>");
        }
        self.pos += 1;
        if !self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            return self.err(self.pos, "expected a variable index after 'x'");
        }
        let (_, idx) = self.small_int("variable index")?;
        let idx = idx as usize;
        if idx == 0 || idx > self.n {
            let _ = at;
            return Err(Error::IndexOutOfRange { index: idx, n: self.n });
        }
        let mut e = 1u64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.small_int("exponent")?.1;
        }
        let slot = &mut mono[idx - 1];
        *slot = slot
            .checked_add(e as u32)
            .ok_or_else(|| Error::Syntax {
                position: at,
                message: "exponent overflow".into(),
            })?;
        Ok(())
    }

    fn term(&mut self) -> Result<(PolyMonomial, Rational)> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let mut c = Rational::from_integer(1.into());
        let mut any = false;
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            c = self.coeff()?;
            any = true;
        }
        let mut mono = vec![0u32; self.n];
        loop {
            match self.peek() {
                Some(b'*') => {
                    if !any {
                        return self.err(self.pos, "unexpected '*'");
                    }
                    self.pos += 1;
                    self.factor(&mut mono)?;
                }
                Some(b'x') => self.factor(&mut mono)?,
                _ => break,
            }
            any = true;
        }
        if !any {
            return self.err(start, "expected a term");
        }
        Ok((PolyMonomial::new(&mono, 0), c))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut p = Polynomial::zero(self.n);
        let mut sign = 1i64;
        match self.peek() {
            Some(b'-') => {
                sign = -1;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            p.add_term(m, c * Rational::from_integer(sign.into()));
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                None => break,
                Some(ch) => {
                    return self.err(self.pos, format!("unexpected character '{}'", ch as char))
                }
            }
            self.pos += 1;
        }
        Ok(p)
    }
}

/// Parses a polynomial in `x1 … xn` without any homogeneity requirement.
pub fn parse_polynomial(source: &str, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let mut parser = Parser {
        src: source.as_bytes(),
        pos: 0,
        n,
    };
    parser.expr()
}

/// Parses a potential and records its degree.
pub fn parse_potential(source: &str, n: usize) -> Result<Potential> {
    Potential::new(parse_polynomial(source, n)?)
}

/// Canonical text of a potential, readable by [`parse_potential`].
pub fn pretty_print(p: &Potential) -> String {
    p.polynomial().to_string()
}
