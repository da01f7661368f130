//! Parser for knot expressions like "T(4,5) # -T(2,3)".
//!
//! Grammar, whitespace-insensitive:
//!   sum  := term ('#' term)*
//!   term := ['-'] 'T(' INT ',' INT ')'
//! Hand-written descent so errors carry exact byte offsets.

use thiserror::Error;

use crate::knot::{KnotError, KnotSum, Sign, TorusKnot};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("invalid torus knot at byte {offset}: {source}")]
    Validation {
        offset: usize,
        #[source]
        source: KnotError,
    },
}

pub fn parse(input: &str) -> Result<KnotSum, ParseError> {
    let mut parser = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let mut summands = vec![parser.term()?];
    loop {
        parser.skip_ws();
        if parser.at_end() {
            break;
        }
        parser.expect(b'#', "'#' or end of input")?;
        summands.push(parser.term()?);
    }
    Ok(KnotSum::new(summands).expect("at least one summand parsed"))
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn syntax(&self, expected: &str) -> ParseError {
        let found = match self.bytes.get(self.pos) {
            Some(&b) if b.is_ascii_graphic() => format!("found '{}'", b as char),
            Some(&b) => format!("found byte 0x{b:02x}"),
            None => "found end of input".to_string(),
        };
        ParseError::Syntax {
            offset: self.pos,
            message: format!("expected {expected}, {found}"),
        }
    }

    fn expect(&mut self, byte: u8, expected: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(expected))
        }
    }

    fn term(&mut self) -> Result<TorusKnot, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let sign = if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            Sign::Negative
        } else {
            Sign::Positive
        };
        self.skip_ws();
        if self.bytes.get(self.pos) != Some(&b'T') {
            return Err(self.syntax(if sign == Sign::Negative {
                "'T'"
            } else {
                "'T' or '-'"
            }));
        }
        self.pos += 1;
        self.expect(b'(', "'('")?;
        let p = self.integer()?;
        self.expect(b',', "','")?;
        let q = self.integer()?;
        self.expect(b')', "')'")?;
        TorusKnot::with_sign(sign, p, q).map_err(|source| ParseError::Validation {
            offset: start,
            source,
        })
    }

    fn integer(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        if !self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            return Err(self.syntax("a number"));
        }
        // Saturate well past the parameter cap; validation rejects the rest.
        let mut value: u32 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value.saturating_mul(10).saturating_add((b - b'0') as u32);
            self.pos += 1;
        }
        Ok(value)
    }
}
