//! Expressions over jets: `+`, `-`, `*`, `^`, `inv(...)`, parentheses,
//! fraction literals and the variable `X`. Juxtaposition multiplies, so
//! `3X` and `2(1+X)` are accepted.

use anyhow::{anyhow, bail, Result};
use semiring_pss::jets::Jet;
use semiring_pss::rational::{one, parse_rational};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(String),
    X,
    Inv,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '0'..='9' => {
                let mut n = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    n.push(d);
                    chars.next();
                }
                out.push(Tok::Num(n));
            }
            'X' | 'x' => {
                chars.next();
                out.push(Tok::X);
            }
            'i' => {
                let word: String = chars.by_ref().take(3).collect();
                if word != "inv" {
                    bail!("unknown identifier starting at {word:?}");
                }
                out.push(Tok::Inv);
            }
            _ => {
                chars.next();
                out.push(match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::Open,
                    ')' => Tok::Close,
                    _ => bail!("unexpected character {c:?}"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(anyhow!("expected {t:?} at token {}", self.pos))
        }
    }

    fn expr(&mut self) -> Result<Jet> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Jet> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.mul(&self.unary()?)?;
            } else if matches!(self.peek(), Some(Tok::X | Tok::Inv | Tok::Open)) {
                acc = acc.mul(&self.power()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Jet> {
        if self.eat(&Tok::Minus) {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Jet> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let e: u32 = match self.toks.get(self.pos) {
            Some(Tok::Num(s)) => s.parse()?,
            _ => bail!("expected exponent at token {}", self.pos),
        };
        self.pos += 1;
        let mut acc = Jet::one(self.n);
        for _ in 0..e {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Jet> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(num)) => {
                self.pos += 1;
                let text = if self.eat(&Tok::Slash) {
                    match self.toks.get(self.pos) {
                        Some(Tok::Num(den)) => {
                            self.pos += 1;
                            format!("{num}/{den}")
                        }
                        _ => bail!("expected denominator at token {}", self.pos),
                    }
                } else {
                    num
                };
                Ok(Jet::monomial(self.n, 0, parse_rational(&text)?))
            }
            Some(Tok::X) => {
                self.pos += 1;
                Ok(Jet::monomial(self.n, 1, one()))
            }
            Some(Tok::Inv) => {
                self.pos += 1;
                self.expect(Tok::Open)?;
                let inner = self.expr()?;
                self.expect(Tok::Close)?;
                Ok(inner.inv()?)
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::Close)?;
                Ok(inner)
            }
            other => bail!("unexpected {other:?} at token {}", self.pos),
        }
    }
}

/// Evaluates `expr` in `R[X]/(X^n)`.
pub fn evaluate(expr: &str, n: usize) -> Result<Jet> {
    let mut p = Parser { toks: lex(expr)?, pos: 0, n };
    if p.toks.is_empty() {
        bail!("empty expression");
    }
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        bail!("trailing input at token {}", p.pos);
    }
    Ok(v)
}
