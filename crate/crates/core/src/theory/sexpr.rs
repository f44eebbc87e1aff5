// Theory expressions: "EA+" | "PA" | "(rfn <level> <ord> <theory>)" | "(con <ord> <theory>)".

use super::{TheoryError, TheoryExpr};
use crate::ordinal::parse_ordinal;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> TheoryError {
        TheoryError::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn expect_char(&mut self, c: char) -> Result<(), TheoryError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    /// A run of characters up to whitespace or a parenthesis.
    pub(crate) fn word(&mut self) -> Result<&'a str, TheoryError> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .find(|c: char| c.is_whitespace() || c == '(' || c == ')')
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a word"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    /// A token that may contain balanced parentheses, e.g. "phi(1,w^(w+1))".
    pub(crate) fn balanced(&mut self) -> Result<&'a str, TheoryError> {
        self.skip_ws();
        let rest = self.rest();
        let mut depth = 0usize;
        let mut end = rest.len();
        for (i, c) in rest.char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => {
                    end = i;
                    break;
                }
                ')' => depth -= 1,
                c if c.is_whitespace() && depth == 0 => {
                    end = i;
                    break;
                }
                _ => {}
            }
        }
        if end == 0 {
            return Err(self.error("expected an ordinal"));
        }
        self.pos += end;
        Ok(&rest[..end])
    }
}

pub(crate) fn parse_theory(src: &str) -> Result<TheoryExpr, TheoryError> {
    let mut cursor = Cursor::new(src);
    let theory = theory(&mut cursor)?;
    if !cursor.at_end() {
        return Err(cursor.error("unexpected trailing input"));
    }
    Ok(theory)
}

fn theory(cursor: &mut Cursor<'_>) -> Result<TheoryExpr, TheoryError> {
    if cursor.peek() == Some('(') {
        cursor.expect_char('(')?;
        let head_pos = cursor.pos;
        let level = match cursor.word()? {
            "rfn" => {
                let word = cursor.word()?;
                word.parse::<u32>()
                    .map_err(|_| cursor.error(format!("invalid level {word:?}")))?
            }
            "con" => 1,
            other => {
                cursor.pos = head_pos;
                return Err(cursor.error(format!("unknown form {other:?}")));
            }
        };
        let iterations = parse_ordinal(cursor.balanced()?)?;
        let over = theory(cursor)?;
        cursor.expect_char(')')?;
        return TheoryExpr::reflect(level, iterations, over);
    }
    let start = cursor.pos;
    match cursor.word()? {
        "EA+" => Ok(TheoryExpr::EaPlus),
        "PA" => Ok(TheoryExpr::Pa),
        other => {
            cursor.pos = start;
            Err(cursor.error(format!("unknown base theory {other:?}")))
        }
    }
}
