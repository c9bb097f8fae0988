use std::fmt;

use crate::error::{Error, Result};

/// One letter of a signed generator word: generator index (0-based) and sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Letter {
        Letter { gen, inverse: false }
    }
    pub fn neg(gen: usize) -> Letter {
        Letter { gen, inverse: true }
    }
    pub fn inverted(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

/// A word in the generators and their inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneratorWord(pub Vec<Letter>);

impl GeneratorWord {
    pub fn positive(gens: &[usize]) -> GeneratorWord {
        GeneratorWord(gens.iter().map(|&g| Letter::pos(g)).collect())
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GeneratorWord(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses whitespace-separated tokens `s<i>` / `s<i>^-1`. Parenthesized groups
    /// with an exponent, e.g. `(s1 s2 s1)^-1` or `(s1 s2)^3`, and `s<i>^<k>` are accepted too.
    pub fn parse(text: &str, rank: usize) -> Result<GeneratorWord> {
        let mut p = Parser { s: text.as_bytes(), pos: 0, rank };
        let w = p.sequence(0)?;
        p.skip_ws();
        if p.pos < p.s.len() {
            return Err(p.err("unexpected character"));
        }
        Ok(w)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|l| if l.inverse { format!("s{}^-1", l.gen + 1) } else { format!("s{}", l.gen + 1) })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    rank: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { offset: self.pos, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Option<i64> {
        let start = self.pos;
        if self.pos < self.s.len() && self.s[self.pos] == b'-' {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok().or_else(|| {
            self.pos = start;
            None
        })
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.pos < self.s.len() && self.s[self.pos] == b'^' {
            self.pos += 1;
            self.number().ok_or_else(|| self.err("expected integer exponent"))
        } else {
            Ok(1)
        }
    }

    fn sequence(&mut self, depth: usize) -> Result<GeneratorWord> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            if self.pos >= self.s.len() {
                break;
            }
            let base = match self.s[self.pos] {
                b'(' => {
                    self.pos += 1;
                    let inner = self.sequence(depth + 1)?;
                    self.skip_ws();
                    if self.pos >= self.s.len() || self.s[self.pos] != b')' {
                        return Err(self.err("expected ')'"));
                    }
                    self.pos += 1;
                    inner
                }
                b')' if depth > 0 => break,
                b's' => {
                    let start = self.pos;
                    self.pos += 1;
                    let digits = self.pos;
                    while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let idx: usize =
                        std::str::from_utf8(&self.s[digits..self.pos])
                            .ok()
                            .and_then(|d| d.parse().ok())
                            .ok_or(Error::Parse { offset: start, message: "expected generator index".into() })?;
                    if idx == 0 || idx > self.rank {
                        return Err(Error::Parse { offset: start, message: format!("generator s{idx} out of range") });
                    }
                    GeneratorWord(vec![Letter::pos(idx - 1)])
                }
                _ => return Err(self.err("invalid token")),
            };
            let e = self.exponent()?;
            let piece = if e < 0 { base.inverse() } else { base };
            for _ in 0..e.unsigned_abs() {
                out.extend_from_slice(&piece.0);
            }
        }
        Ok(GeneratorWord(out))
    }
}
