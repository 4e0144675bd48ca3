//! Parser for the canonical polynomial text form.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := integer | name ['^' integer]
//! ```
//!
//! The parser accepts any ordering of terms; [`IntPoly`]'s `Display`
//! re-emits canonical graded-lex order, so `parse(display(p)) == p`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, VarSet};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn err(&self, reason: impl Into<String>) -> Error {
        Error::PolyParse {
            at: self.pos,
            reason: reason.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits
            .parse::<BigInt>()
            .map_err(|e| self.err(format!("bad integer: {e}")))
    }

    fn name(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a generator name"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string())
    }
}

/// Parses canonical polynomial text over the given generators.
pub fn parse_poly(vars: &VarSet, input: &str) -> Result<IntPoly> {
    let mut cur = Cursor {
        src: input.as_bytes(),
        pos: 0,
    };
    let mut poly = IntPoly::zero(vars);
    let mut sign = match cur.peek() {
        Some(b'-') => {
            cur.bump();
            -1
        }
        Some(_) => 1,
        None => return Err(cur.err("empty input")),
    };
    loop {
        let (exps, coeff) = parse_term(&mut cur, vars)?;
        poly.add_term(exps, coeff * BigInt::from(sign));
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.bump();
                sign = 1;
            }
            Some(b'-') => {
                cur.bump();
                sign = -1;
            }
            Some(c) => return Err(cur.err(format!("unexpected `{}`", c as char))),
        }
    }
    Ok(poly)
}

fn parse_term(cur: &mut Cursor, vars: &VarSet) -> Result<(Vec<u32>, BigInt)> {
    let mut exps = vec![0u32; vars.len()];
    let mut coeff = BigInt::one();
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff *= cur.integer()?;
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let at = cur.pos;
                let name = cur.name()?;
                let idx = vars.index_of(&name).ok_or(Error::PolyParse {
                    at,
                    reason: format!("unknown generator `{name}`"),
                })?;
                let exp = if cur.peek() == Some(b'^') {
                    cur.bump();
                    let e = cur.integer()?;
                    u32::try_from(e.clone()).map_err(|_| cur.err(format!("exponent {e} too large")))?
                } else {
                    1
                };
                exps[idx] += exp;
            }
            _ => return Err(cur.err("expected a coefficient or generator")),
        }
        match cur.peek() {
            Some(b'*') => {
                cur.bump();
            }
            // Implicit product, e.g. `3h` or `2 q^3`.
            Some(c) if c.is_ascii_digit() || c.is_ascii_alphabetic() || c == b'_' => {}
            _ => return Ok((exps, coeff)),
        }
    }
}
