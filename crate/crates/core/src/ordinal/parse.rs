// Recursive descent over the ordinal grammar:
//
//   ord    := sum
//   sum    := prod ("+" prod)*
//   prod   := atom ("*" nat)?
//   atom   := nat | "w" | "w^" atom | "e0" | "phi(" ord "," ord ")" | "(" ord ")"
//
// Whitespace between tokens is ignored.

use super::{Ordinal, OrdinalError};

/// Numerals must be strictly below this value unless configured otherwise.
pub const DEFAULT_NUMERAL_LIMIT: u64 = 1 << 32;

#[derive(Debug, Clone, Copy)]
pub struct ParseOptions {
    pub numeral_limit: u64,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self {
            numeral_limit: DEFAULT_NUMERAL_LIMIT,
        }
    }
}

pub fn parse_ordinal(text: &str) -> Result<Ordinal, OrdinalError> {
    parse_ordinal_with(text, ParseOptions::default())
}

pub fn parse_ordinal_with(text: &str, options: ParseOptions) -> Result<Ordinal, OrdinalError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        options,
    };
    let value = parser.sum()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    options: ParseOptions,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> OrdinalError {
        OrdinalError::Syntax {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), OrdinalError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{token}'")))
        }
    }

    fn sum(&mut self) -> Result<Ordinal, OrdinalError> {
        let mut acc = self.prod()?;
        while self.eat("+") {
            let rhs = self.prod()?;
            acc = acc
                .checked_add(&rhs)
                .ok_or(OrdinalError::CoefficientOverflow)?;
        }
        Ok(acc)
    }

    fn prod(&mut self) -> Result<Ordinal, OrdinalError> {
        let base = self.atom()?;
        if self.eat("*") {
            let n = self.nat()?;
            return base
                .checked_mul_nat(n)
                .ok_or(OrdinalError::CoefficientOverflow);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ordinal, OrdinalError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::nat(self.nat()?)),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(")")?;
                Ok(inner)
            }
            Some(b'w') => {
                self.pos += 1;
                if self.eat("^") {
                    Ok(self.atom()?.omega_pow())
                } else {
                    Ok(Ordinal::omega())
                }
            }
            Some(b'e') => {
                self.expect("e0")?;
                Ok(Ordinal::epsilon_zero())
            }
            Some(b'p') => {
                self.expect("phi")?;
                self.expect("(")?;
                let index = self.sum()?;
                self.expect(",")?;
                let arg = self.sum()?;
                self.expect(")")?;
                Ok(Ordinal::veblen(&index, &arg))
            }
            Some(_) => Err(self.error("expected an ordinal term")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn nat(&mut self) -> Result<u64, OrdinalError> {
        self.skip_ws();
        let start = self.pos;
        let limit = self.options.numeral_limit;
        let mut value: u64 = 0;
        while let Some(d) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d - b'0')))
                .filter(|v| *v < limit)
                .ok_or(OrdinalError::NumeralOverflow { pos: start, limit })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a numeral"));
        }
        Ok(value)
    }
}
